#include "hardylab/rhi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "hardylab/continuous.hpp"
#include "hardylab/errors.hpp"

namespace hardylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_q(double q) {
    if (!(q > 1.0) || !std::isfinite(q))
        throw std::invalid_argument("reverse Holder ratio: need q > 1");
}

void check_pq(double p, double q) {
    check_q(q);
    if (!std::isfinite(p) || !(p >= q))
        throw std::invalid_argument("promoted bound: need p >= q");
}

void check_c(double c) {
    if (!(c >= 1.0) || !std::isfinite(c))
        throw std::invalid_argument("constant pipeline: need finite c >= 1");
}

// c * (p-q)/p * (p/(p-1))^q, nondecreasing in p on (max(q,1), inf).
double psi(double p, double q, double c) {
    return c * ((p - q) / p) * std::pow(p / (p - 1.0), q);
}

// Maximize g over [lo, hi] by golden section; returns the best value
// seen (endpoints included) and stores the argument in *arg.
double golden_max(const std::function<double(double)>& g, double lo, double hi,
                  double* arg) {
    constexpr double kRatio = 0.6180339887498949;
    double best = g(lo);
    double best_arg = lo;
    double ghi = g(hi);
    if (ghi > best) {
        best = ghi;
        best_arg = hi;
    }
    double a = lo, b = hi;
    double x1 = b - kRatio * (b - a);
    double x2 = a + kRatio * (b - a);
    double f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 120 && (b - a) > 1e-14; ++it) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kRatio * (b - a);
            f1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kRatio * (b - a);
            f2 = g(x2);
        }
        double v = std::max(f1, f2);
        if (v > best) {
            best = v;
            best_arg = f1 >= f2 ? x1 : x2;
        }
    }
    if (arg) *arg = best_arg;
    return best;
}

std::vector<double> candidate_points(const Weight& w, int grid) {
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(grid) + 64);
    for (const PowerPiece& piece : w.pieces()) {
        pts.push_back(piece.lo);
        pts.push_back(piece.hi);
    }
    for (int j = 0; j <= grid; ++j)
        pts.push_back(static_cast<double>(j) / grid);
    for (int j = 1; j <= 40; ++j) pts.push_back(std::ldexp(1.0, -j));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Bracket x between its candidate neighbours.
void neighbour_bracket(const std::vector<double>& pts, double x, double* lo,
                       double* hi) {
    auto it = std::lower_bound(pts.begin(), pts.end(), x);
    *hi = it == pts.end() ? 1.0 : (*it == x && it + 1 != pts.end() ? *(it + 1) : *it);
    *lo = it == pts.begin() ? 0.0 : *(it - 1);
    if (*hi < x) *hi = 1.0;
    if (*lo > x) *lo = 0.0;
}

struct EndpointBest {
    double c = 1.0;
    double raw = 1.0;  // best before golden refinement
    double arg = 0.0;
};

// Best ratio over a one-parameter family g(t) on the candidate points,
// golden-refined around the three strongest cells.
EndpointBest endpoint_search(const std::function<double(double)>& g,
                             const std::vector<double>& pts, bool skip_zero,
                             bool skip_one) {
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double t = pts[i];
        if (skip_zero && t <= 0.0) continue;
        if (skip_one && t >= 1.0) continue;
        scored.emplace_back(g(t), i);
    }
    std::sort(scored.begin(), scored.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    EndpointBest best;
    best.raw = scored.front().first;
    best.c = best.raw;
    best.arg = pts[scored.front().second];
    std::size_t tops = std::min<std::size_t>(3, scored.size());
    for (std::size_t k = 0; k < tops; ++k) {
        std::size_t i = scored[k].second;
        double lo = i == 0 ? pts[i] : pts[i - 1];
        double hi = i + 1 == pts.size() ? pts[i] : pts[i + 1];
        if (skip_zero) lo = std::max(lo, pts[i] * 0.5);
        if (skip_one) hi = std::min(hi, 0.5 + pts[i] * 0.5);
        if (!(hi > lo)) continue;
        double arg = pts[i];
        double v = golden_max(g, lo, hi, &arg);
        if (v > best.c) {
            best.c = v;
            best.arg = arg;
        }
    }
    return best;
}

}  // namespace

IntervalFamily family_from_string(const std::string& name) {
    if (name == "prefix") return IntervalFamily::prefix;
    if (name == "suffix") return IntervalFamily::suffix;
    if (name == "all") return IntervalFamily::all;
    throw parse_error("unknown interval family \"" + name +
                      "\" (want prefix, suffix or all)");
}

const char* family_name(IntervalFamily f) {
    switch (f) {
        case IntervalFamily::prefix: return "prefix";
        case IntervalFamily::suffix: return "suffix";
        case IntervalFamily::all: return "all";
    }
    return "?";
}

double interval_ratio(const Weight& w, double q, double a, double b) {
    check_q(q);
    if (!(a >= 0.0) || !(b <= 1.0) || !(a < b))
        throw std::invalid_argument("interval_ratio: need 0 <= a < b <= 1");
    // An interval inside one constant piece has ratio exactly 1; return
    // it directly so closed-form rounding cannot fake a constant above 1
    // (which would drag the degeneration exponent down from +inf).
    for (const PowerPiece& piece : w.pieces()) {
        if (a >= piece.lo && b <= piece.hi) {
            if (piece.exponent == 0.0) return 1.0;
            break;
        }
        if (piece.hi >= b) break;
    }
    double len = b - a;
    double avg1 = w.range_integral(a, b, 1.0) / len;
    if (avg1 == 0.0) return 1.0;
    double avgq = w.range_integral(a, b, q) / len;
    return avgq / std::pow(avg1, q);
}

namespace {

// Same ratio as interval_ratio, but for step weights the per-piece
// powers are computed once up front, so the O(grid^2) pair scan and the
// descent rounds stop paying a pow() per piece per evaluation.
class RatioEval {
public:
    RatioEval(const Weight& w, double q) : w_(&w), q_(q), step_(w.is_step()) {
        if (!step_) return;
        const std::vector<PowerPiece>& ps = w.pieces();
        cum1_.push_back(0.0);
        cumq_.push_back(0.0);
        for (const PowerPiece& piece : ps) {
            lo_.push_back(piece.lo);
            hi_.push_back(piece.hi);
            v1_.push_back(piece.coeff);
            vq_.push_back(std::pow(piece.coeff, q));
            cum1_.push_back(cum1_.back() + v1_.back() * (piece.hi - piece.lo));
            cumq_.push_back(cumq_.back() + vq_.back() * (piece.hi - piece.lo));
        }
    }

    double operator()(double a, double b) const {
        if (!step_) return interval_ratio(*w_, q_, a, b);
        // inside one (constant) piece the ratio is exactly 1
        std::size_t j =
            std::lower_bound(hi_.begin(), hi_.end(), b) - hi_.begin();
        if (j < hi_.size() && a >= lo_[j]) return 1.0;
        double len = b - a;
        double avg1 = (cum(cum1_, v1_, b) - cum(cum1_, v1_, a)) / len;
        if (avg1 == 0.0) return 1.0;
        double avgq = (cum(cumq_, vq_, b) - cum(cumq_, vq_, a)) / len;
        return avgq / std::pow(avg1, q_);
    }

private:
    double cum(const std::vector<double>& c, const std::vector<double>& v,
               double x) const {
        std::size_t j =
            std::lower_bound(hi_.begin(), hi_.end(), x) - hi_.begin();
        if (j >= hi_.size()) return c.back();
        return c[j] + v[j] * (x - lo_[j]);
    }

    const Weight* w_;
    double q_;
    bool step_;
    std::vector<double> lo_, hi_, v1_, vq_, cum1_, cumq_;
};

}  // namespace

RhiSearch rhi_constant_search(const Weight& w, double q, IntervalFamily family,
                              int grid) {
    check_q(q);
    if (grid < 64)
        throw std::invalid_argument("reverse Holder search: need grid >= 64");
    RhiSearch out;
    const PowerPiece& first = w.pieces().front();
    if (first.lo == 0.0 &&
        std::isinf(w.range_integral(0.0, first.hi, q))) {
        out.c = kInf;
        out.arg_lo = 0.0;
        out.arg_hi = first.hi;
        out.divergent = true;
        return out;
    }

    std::vector<double> pts = candidate_points(w, grid);
    RatioEval ev(w, q);
    auto prefix_ratio = [&](double t) { return ev(0.0, t); };
    auto suffix_ratio = [&](double t) { return ev(t, 1.0); };

    double raw = 1.0;
    if (family == IntervalFamily::prefix) {
        EndpointBest best = endpoint_search(prefix_ratio, pts, true, false);
        out.c = best.c;
        out.arg_lo = 0.0;
        out.arg_hi = best.arg;
        raw = best.raw;
    } else if (family == IntervalFamily::suffix) {
        EndpointBest best = endpoint_search(suffix_ratio, pts, false, true);
        out.c = best.c;
        out.arg_lo = best.arg;
        out.arg_hi = 1.0;
        raw = best.raw;
    } else {
        std::vector<std::pair<double, std::pair<std::size_t, std::size_t>>> scored;
        scored.reserve(pts.size() * (pts.size() - 1) / 2);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                scored.emplace_back(ev(pts[i], pts[j]), std::make_pair(i, j));
        std::sort(scored.begin(), scored.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        raw = scored.front().first;
        out.c = raw;
        out.arg_lo = pts[scored.front().second.first];
        out.arg_hi = pts[scored.front().second.second];

        // Descent seeds: the strongest grid cells plus the refined
        // endpoint-family maxima, so the pair family can never come out
        // below either endpoint family.
        EndpointBest pre = endpoint_search(prefix_ratio, pts, true, false);
        EndpointBest suf = endpoint_search(suffix_ratio, pts, false, true);
        if (pre.c > out.c) {
            out.c = pre.c;
            out.arg_lo = 0.0;
            out.arg_hi = pre.arg;
        }
        if (suf.c > out.c) {
            out.c = suf.c;
            out.arg_lo = suf.arg;
            out.arg_hi = 1.0;
        }

        std::vector<std::pair<double, double>> seeds;
        std::size_t tops = std::min<std::size_t>(8, scored.size());
        for (std::size_t k = 0; k < tops; ++k)
            seeds.emplace_back(pts[scored[k].second.first],
                               pts[scored[k].second.second]);
        seeds.emplace_back(0.0, pre.arg);
        seeds.emplace_back(suf.arg, 1.0);

        for (auto [a, b] : seeds) {
            for (int round = 0; round < 4; ++round) {
                double lo, hi;
                neighbour_bracket(pts, a, &lo, &hi);
                hi = std::min(hi, b - 1e-15);
                if (hi > lo) {
                    golden_max([&](double x) { return ev(x, b); }, lo, hi, &a);
                }
                neighbour_bracket(pts, b, &lo, &hi);
                lo = std::max(lo, a + 1e-15);
                if (hi > lo) {
                    golden_max([&](double x) { return ev(a, x); }, lo, hi, &b);
                }
            }
            if (b > a) {
                double v = ev(a, b);
                if (v > out.c) {
                    out.c = v;
                    out.arg_lo = a;
                    out.arg_hi = b;
                }
            }
        }
    }
    out.uncertainty = (out.c - raw) + 1e-9 * std::max(1.0, out.c);
    return out;
}

double rhi_constant(const Weight& w, double q, IntervalFamily family, int grid) {
    return rhi_constant_search(w, q, family, grid).c;
}

double p0_solve(double q, double c) {
    check_q(q);
    check_c(c);
    if (c == 1.0) return kInf;
    const double noise = 1e-13 * std::max(1.0, c);
    auto s = [&](double p) { return psi(p, q, c) - 1.0; };

    double lo = q;  // psi(q) = 0, so s(lo) < 0 unconditionally
    double hi = q * (1.0 + std::ldexp(1.0, -20));
    while (s(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1.8446744073709552e19) return kInf;
    }

    // One monotone crossing is expected; reject anything noisier.
    int flips_up = 0;
    int last_sign = 0;
    for (int i = 0; i < 1024; ++i) {
        double p = lo * std::pow(hi / lo, i / 1023.0);
        double v = s(p);
        int sign = std::fabs(v) <= noise ? 0 : (v > 0.0 ? 1 : -1);
        if (sign == 0) continue;
        if (last_sign == -1 && sign == 1) ++flips_up;
        if (last_sign == 1 && sign == -1)
            throw solver_error("degeneration exponent: sign scan found a "
                               "downward crossing");
        last_sign = sign;
    }
    if (flips_up > 1)
        throw solver_error("degeneration exponent: sign scan found multiple "
                           "crossings");

    // Bisect well past the promised 1e-12 relative width so the
    // residual check below has slack even for badly conditioned c.
    for (int it = 0; it < 200 && hi - lo > 8e-16 * lo; ++it) {
        double mid = 0.5 * (lo + hi);
        if (s(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double root = 0.5 * (lo + hi);
    if (std::fabs(s(root)) > 1e-10)
        throw solver_error("degeneration exponent: residual check failed");
    return root;
}

double k_p(double p, double q, double c) {
    check_pq(p, q);
    check_c(c);
    double k = 1.0 - psi(p, q, c);
    if (!(k > 0.0))
        throw std::domain_error("promoted constant: p is at or past the "
                                "degeneration exponent");
    return k;
}

double c_prime(double p, double q, double c) {
    check_pq(p, q);
    check_c(c);
    if (p == q) return c;
    return q * c / (p * k_p(p, q, c));
}

double phi_y(double x, double y, double p, double q) {
    check_pq(p, q);
    if (!(x >= 0.0) || !(y >= 0.0))
        throw std::invalid_argument("phi_y: need x, y >= 0");
    return std::pow(x, p / q - 1.0) * y - (p - q) / p * std::pow(x, p / q);
}

namespace {

struct PromotedCheck {
    bool ok = true;
    bool divergent = false;
    double slack = kInf;  // min over checks of margin + budget
    double worst_delta = 1.0;
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
    double worst_margin = kInf;
    double worst_budget = 0.0;
};

void fold_check(PromotedCheck* acc, double delta, double lhs, double rhs,
                double budget) {
    if (std::isinf(lhs)) {
        acc->divergent = true;
        acc->ok = false;
        acc->worst_delta = delta;
        acc->worst_lhs = lhs;
        acc->worst_rhs = rhs;
        acc->worst_margin = -kInf;
        acc->worst_budget = budget;
        acc->slack = -kInf;
        return;
    }
    double margin = rhs - lhs;
    if (margin + budget < acc->slack) {
        acc->slack = margin + budget;
        acc->worst_delta = delta;
        acc->worst_lhs = lhs;
        acc->worst_rhs = rhs;
        acc->worst_margin = margin;
        acc->worst_budget = budget;
    }
    if (margin < -budget) acc->ok = false;
}

std::vector<double> verify_grid(const Weight& w, bool mirrored) {
    std::vector<double> out;
    for (int j = 0; j <= 40; ++j) {
        double d = std::ldexp(1.0, -j);
        out.push_back(mirrored ? 1.0 - d : d);
    }
    for (const PowerPiece& piece : w.pieces()) {
        for (double t : {piece.lo, piece.hi}) {
            if (mirrored ? t < 1.0 : t > 0.0) out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Checks avg(w^p) <= c' avg(w)^p over the family's verification grid,
// plus the intermediate avg((Aw)^(p-q) w^q) bound on prefixes.  The
// error budget carries the sensitivity of c' to the search resolution,
// d(c')/dc = q / (p k_p^2), times the reported c uncertainty.
PromotedCheck check_promoted(const Weight& w, double q, double p, double c,
                             double c_unc, IntervalFamily family,
                             const QuadSpec& spec) {
    double k = k_p(p, q, c);
    double cp = c_prime(p, q, c);
    double sens = q / (p * k * k) * c_unc;
    PromotedCheck acc;

    if (family != IntervalFamily::suffix) {
        for (double d : verify_grid(w, false)) {
            if (acc.divergent) break;
            double avg1 = w.prefix_integral(d, 1.0) / d;
            double rhs = cp * std::pow(avg1, p);
            double lhs = w.prefix_integral(d, p) / d;
            double budget = rounding_floor({lhs, rhs}) +
                            sens * std::pow(avg1, p);
            fold_check(&acc, d, lhs, rhs, budget);
            if (acc.divergent || p == q) continue;
            QuadResult cross = integrate_product(w, 0.0, d, p - q, q, spec);
            if (cross.divergent) {
                fold_check(&acc, d, kInf, rhs, budget);
                continue;
            }
            double lhs2 = cross.value / d;
            fold_check(&acc, d, lhs2, rhs,
                       rounding_floor({lhs2, rhs}) + sens * std::pow(avg1, p) +
                           cross.error / d);
        }
    }
    if (family != IntervalFamily::prefix) {
        for (double t : verify_grid(w, true)) {
            if (acc.divergent) break;
            double len = 1.0 - t;
            double avg1 = w.range_integral(t, 1.0, 1.0) / len;
            double rhs = cp * std::pow(avg1, p);
            double lhs = w.range_integral(t, 1.0, p) / len;
            fold_check(&acc, t, lhs, rhs,
                       rounding_floor({lhs, rhs}) + sens * std::pow(avg1, p));
        }
    }
    return acc;
}

}  // namespace

IneqReport theorem3_verify(const Weight& w, double q, double p,
                           const QuadSpec& spec, int grid) {
    check_pq(p, q);
    if (!w.is_nonincreasing())
        throw precondition_error("promoted bound: weight must be non-increasing");
    RhiSearch search = rhi_constant_search(w, q, IntervalFamily::prefix, grid);

    IneqReport report;
    report.op = "theorem3";
    report.params = {{"p", p}, {"q", q}, {"c", search.c},
                     {"c_uncertainty", search.uncertainty}};
    if (search.divergent) {
        report.lhs = kInf;
        report.rhs = kInf;
        report.margin = std::numeric_limits<double>::quiet_NaN();
        report.status = CheckStatus::divergent;
        return report;
    }
    PromotedCheck acc =
        check_promoted(w, q, p, search.c, search.uncertainty,
                       IntervalFamily::prefix, spec);
    report.params["c_prime"] = c_prime(p, q, search.c);
    report.params["k_p"] = k_p(p, q, search.c);
    report.params["delta"] = acc.worst_delta;
    report.lhs = acc.worst_lhs;
    report.rhs = acc.worst_rhs;
    report.margin = acc.worst_margin;
    report.budget = acc.worst_budget;
    report.status = acc.divergent ? CheckStatus::divergent
                    : acc.ok     ? CheckStatus::pass
                                 : CheckStatus::fail;
    return report;
}

nlohmann::json RhiRange::to_json() const {
    nlohmann::json table_json = nlohmann::json::array();
    for (const RhiRangeRow& row : table) {
        table_json.push_back({{"p", json_number(row.p)},
                              {"k_p", json_number(row.k_p)},
                              {"c_prime", json_number(row.c_prime)},
                              {"verified", row.verified}});
    }
    return {{"q", json_number(q)},
            {"family", family_name(family)},
            {"c", json_number(c)},
            {"c_uncertainty", json_number(c_uncertainty)},
            {"p0", json_number(p0)},
            {"divergent", divergent},
            {"table", table_json}};
}

bool RhiRange::all_verified() const {
    if (divergent || table.empty()) return false;
    for (const RhiRangeRow& row : table)
        if (!row.verified) return false;
    return true;
}

RhiRange analyze_weight(const Weight& w, double q, IntervalFamily family,
                        int grid, int p_grid, const QuadSpec& spec) {
    check_q(q);
    if (p_grid < 1)
        throw std::invalid_argument("analyze: need p_grid >= 1");
    if (!w.is_nonincreasing())
        throw precondition_error("analyze: weight must be non-increasing");

    RhiSearch search = rhi_constant_search(w, q, family, grid);
    RhiRange out;
    out.q = q;
    out.family = family;
    out.c = search.c;
    out.c_uncertainty = search.uncertainty;
    out.divergent = search.divergent;
    if (search.divergent) {
        out.p0 = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    out.p0 = p0_solve(q, search.c);

    double span_hi = std::isfinite(out.p0) ? out.p0 : 4.0 * q;
    out.table.reserve(p_grid);
    for (int j = 0; j < p_grid; ++j) {
        double p = q + (span_hi - q) * j / p_grid;
        RhiRangeRow row;
        row.p = p;
        row.k_p = k_p(p, q, search.c);
        row.c_prime = c_prime(p, q, search.c);
        PromotedCheck acc = check_promoted(w, q, p, search.c,
                                           search.uncertainty, family, spec);
        row.verified = acc.ok && !acc.divergent;
        out.table.push_back(row);
    }
    return out;
}

ExtremalRhi extremal_rhi(double q, double c) {
    check_q(q);
    if (!(c > 1.0) || !std::isfinite(c))
        throw std::invalid_argument("extremal weight: need finite c > 1");
    double p0 = p0_solve(q, c);
    if (!std::isfinite(p0))
        throw solver_error("extremal weight: no finite degeneration exponent");
    double a = 1.0 / p0;
    ExtremalRhi out{Weight::power(1.0, a), p0, a,
                    std::fabs(std::pow(1.0 - a, q) / (1.0 - a * q) - c),
                    {}};
    out.truncated.reserve(41);
    for (int j = 0; j <= 40; ++j) {
        double eps = std::ldexp(1.0, -j);
        out.truncated.emplace_back(eps, out.weight.range_integral(eps, 1.0, p0));
    }
    return out;
}

}  // namespace hardylab
