#include "hardylab/weight.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hardylab/errors.hpp"

namespace hardylab {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Closed form for the integral of (k s^(-a))^r over [x0, x1] within one
// piece.  Written around expm1 so that exponents a*r arbitrarily close
// to 1 (where the antiderivative degenerates into a logarithm) lose no
// precision:
//   k^r (x1^h - x0^h)/h  =  k^r x0^h expm1(h log(x1/x0)) / h,  h = 1 - a r.
// The caller rules out x0 == 0 with h <= 0 beforehand.
double piece_power_integral(double k, double a, double r, double x0, double x1) {
    if (x1 <= x0) return 0.0;
    const double kr = std::pow(k, r);  // pow(0,0) == 1 keeps w^0 == 1 on zero pieces
    if (kr == 0.0) return 0.0;
    const double ar = a * r;
    if (ar == 0.0) return kr * (x1 - x0);
    const double h = 1.0 - ar;
    if (x0 == 0.0) return kr * std::pow(x1, h) / h;
    const double logratio = std::log(x1 / x0);
    if (h == 0.0) return kr * logratio;
    return kr * std::pow(x0, h) * std::expm1(h * logratio) / h;
}

void validate_pieces(const std::vector<PowerPiece>& pieces) {
    if (pieces.empty())
        throw std::invalid_argument("weight: piece list is empty");
    bool any_positive = false;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const PowerPiece& p = pieces[i];
        if (!std::isfinite(p.lo) || !std::isfinite(p.hi) ||
            !std::isfinite(p.coeff) || !std::isfinite(p.exponent))
            throw std::invalid_argument("weight: non-finite piece field");
        if (!(p.lo >= 0.0 && p.lo < p.hi && p.hi <= 1.0))
            throw std::invalid_argument("weight: piece bounds must satisfy 0 <= lo < hi <= 1");
        if (p.coeff < 0.0)
            throw std::invalid_argument("weight: negative coeff");
        if (p.exponent < 0.0)
            throw std::invalid_argument("weight: negative exponent");
        if (p.lo == 0.0 && p.exponent >= 1.0)
            throw std::invalid_argument("weight: exponent on the piece touching 0 must be < 1");
        if (p.coeff > 0.0) any_positive = true;
    }
    if (pieces.front().lo != 0.0)
        throw std::invalid_argument("weight: first piece must start at 0");
    if (pieces.back().hi != 1.0)
        throw std::invalid_argument("weight: last piece must end at 1");
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
        if (pieces[i].hi != pieces[i + 1].lo)
            throw std::invalid_argument("weight: pieces must form a gapless partition");
    if (!any_positive)
        throw std::invalid_argument("weight: all coefficients are zero");
}

}  // namespace

Weight::Weight(std::vector<PowerPiece> pieces) : pieces_(std::move(pieces)) {
    validate_pieces(pieces_);
}

Weight Weight::constant(double value) {
    return Weight({PowerPiece{0.0, 1.0, value, 0.0}});
}

Weight Weight::step(const std::vector<double>& values,
                    const std::vector<double>& breakpoints) {
    if (values.size() != breakpoints.size() + 1)
        throw std::invalid_argument("step weight: need exactly one more value than breakpoints");
    std::vector<PowerPiece> pieces;
    pieces.reserve(values.size());
    double lo = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        double hi = i < breakpoints.size() ? breakpoints[i] : 1.0;
        pieces.push_back(PowerPiece{lo, hi, values[i], 0.0});
        lo = hi;
    }
    return Weight(std::move(pieces));  // ordering/range errors surface here
}

Weight Weight::power(double coeff, double a) {
    return Weight({PowerPiece{0.0, 1.0, coeff, a}});
}

bool Weight::is_step() const {
    for (const PowerPiece& p : pieces_)
        if (p.exponent != 0.0) return false;
    return true;
}

bool Weight::is_nonincreasing() const {
    // Each piece is non-increasing on its own (coeff, exponent >= 0);
    // only the junction values can step up.
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
        const PowerPiece& a = pieces_[i];
        const PowerPiece& b = pieces_[i + 1];
        double left = a.coeff * std::pow(a.hi, -a.exponent);
        double right = b.coeff * std::pow(a.hi, -b.exponent);
        if (left < right) return false;
    }
    return true;
}

const PowerPiece& Weight::piece_at(double t) const {
    // first piece with hi >= t; pieces are right-closed
    auto it = std::lower_bound(pieces_.begin(), pieces_.end(), t,
                               [](const PowerPiece& p, double v) { return p.hi < v; });
    return *it;
}

double Weight::eval(double t) const {
    if (!(t > 0.0 && t <= 1.0))
        throw std::domain_error("weight eval: t must lie in (0,1]");
    const PowerPiece& p = piece_at(t);
    return p.coeff * std::pow(t, -p.exponent);
}

double Weight::range_integral(double t0, double t1, double r) const {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("range integral: exponent r must be >= 0");
    if (!(t0 >= 0.0 && t0 <= t1 && t1 <= 1.0))
        throw std::domain_error("range integral: need 0 <= t0 <= t1 <= 1");
    if (t0 == t1) return 0.0;
    const PowerPiece& first = pieces_.front();
    if (t0 == 0.0 && first.coeff > 0.0 && first.exponent * r >= 1.0)
        return kInf;
    double total = 0.0;
    for (const PowerPiece& p : pieces_) {
        if (p.hi <= t0) continue;
        if (p.lo >= t1) break;
        total += piece_power_integral(p.coeff, p.exponent, r,
                                      std::max(p.lo, t0), std::min(p.hi, t1));
    }
    return total;
}

double Weight::prefix_integral(double t, double r) const {
    if (!(t > 0.0 && t <= 1.0))
        throw std::domain_error("prefix integral: t must lie in (0,1]");
    return range_integral(0.0, t, r);
}

double Weight::hardy_average(double t) const {
    return prefix_integral(t, 1.0) / t;
}

Weight Weight::scaled(double k) const {
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::invalid_argument("scaled: factor must be positive and finite");
    std::vector<PowerPiece> pieces = pieces_;
    for (PowerPiece& p : pieces) p.coeff *= k;
    return Weight(std::move(pieces));
}

Weight weight_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("weight JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("pieces") || !doc["pieces"].is_array())
        throw parse_error("weight JSON: expected an object with a \"pieces\" array");
    std::vector<PowerPiece> pieces;
    for (const auto& item : doc["pieces"]) {
        if (!item.is_object())
            throw parse_error("weight JSON: each piece must be an object");
        for (const char* key : {"lo", "hi", "coeff", "exp"})
            if (!item.contains(key) || !item[key].is_number())
                throw parse_error(std::string("weight JSON: piece missing numeric \"") + key + "\"");
        pieces.push_back(PowerPiece{item["lo"].get<double>(), item["hi"].get<double>(),
                                    item["coeff"].get<double>(), item["exp"].get<double>()});
    }
    return Weight(std::move(pieces));
}

std::string weight_to_json(const Weight& w) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const PowerPiece& p : w.pieces())
        pieces.push_back({{"lo", p.lo}, {"hi", p.hi}, {"coeff", p.coeff}, {"exp", p.exponent}});
    nlohmann::json doc{{"pieces", pieces}};
    return doc.dump();
}

}  // namespace hardylab
