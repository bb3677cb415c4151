#include "hardylab/discrete.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hardylab/errors.hpp"

namespace hardylab {

namespace {

// Compensated accumulation; summation order is fixed left to right so
// identical inputs reproduce identical sums bit for bit.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

void check_p(double p) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("discrete bounds need p > 1");
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_field(const std::string& field, std::size_t line_no) {
    std::string t = trim(field);
    if (t.empty())
        throw parse_error("sequence CSV: empty field on line " + std::to_string(line_no));
    try {
        std::size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw parse_error("sequence CSV: bad number \"" + t + "\" on line " +
                          std::to_string(line_no));
    }
}

}  // namespace

WeightedSeq::WeightedSeq(std::vector<double> lambda_, std::vector<double> a_)
    : lambda(std::move(lambda_)), a(std::move(a_)) {
    if (lambda.empty())
        throw std::invalid_argument("weighted sequence: must have at least one term");
    if (lambda.size() != a.size())
        throw std::invalid_argument("weighted sequence: lambda and a lengths differ");
    for (double l : lambda)
        if (!(l > 0.0) || !std::isfinite(l))
            throw std::invalid_argument("weighted sequence: lambda terms must be positive");
    for (double x : a)
        if (!(x >= 0.0) || !std::isfinite(x))
            throw std::invalid_argument("weighted sequence: a terms must be >= 0");
}

WeightedSeq seq_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<double> lambda, a;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (!header_seen) {
            std::string squashed;
            for (char c : t)
                if (!std::isspace(static_cast<unsigned char>(c))) squashed += c;
            if (squashed != "lambda,a")
                throw parse_error("sequence CSV: header must be \"lambda,a\"");
            header_seen = true;
            continue;
        }
        std::size_t comma = t.find(',');
        if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos)
            throw parse_error("sequence CSV: expected two columns on line " +
                              std::to_string(line_no));
        lambda.push_back(parse_field(t.substr(0, comma), line_no));
        a.push_back(parse_field(t.substr(comma + 1), line_no));
    }
    if (!header_seen) throw parse_error("sequence CSV: missing header");
    return WeightedSeq(std::move(lambda), std::move(a));
}

std::vector<RunningRatio> running_ratios(const WeightedSeq& s) {
    std::vector<RunningRatio> out;
    out.reserve(s.size());
    KahanSum A, L;
    for (std::size_t i = 0; i < s.size(); ++i) {
        A.add(s.lambda[i] * s.a[i]);
        L.add(s.lambda[i]);
        out.push_back(RunningRatio{A.value(), L.value(), A.value() / L.value()});
    }
    return out;
}

IneqReport theorem2_sides(const WeightedSeq& s, double p, double tol) {
    check_p(p);
    std::vector<RunningRatio> rr = running_ratios(s);
    KahanSum lhs, cross;
    for (std::size_t i = 0; i < s.size(); ++i) {
        lhs.add(s.lambda[i] * std::pow(rr[i].ratio, p));
        cross.add(s.lambda[i] * s.a[i] * std::pow(rr[i].ratio, p - 1.0));
    }
    const RunningRatio& last = rr.back();
    IneqReport report;
    report.op = "theorem2";
    report.params = {{"p", p}, {"n", static_cast<double>(s.size())}, {"tol", tol}};
    report.lhs = lhs.value();
    report.rhs = p / (p - 1.0) * cross.value() -
                 last.Lambda * std::pow(last.ratio, p) / (p - 1.0);
    report.margin = report.rhs - report.lhs;
    report.budget = tol * std::max(1.0, std::fabs(report.lhs));
    report.status =
        report.margin >= -report.budget ? CheckStatus::pass : CheckStatus::fail;
    return report;
}

IneqReport copson_sides(const WeightedSeq& s, double p, double tol) {
    check_p(p);
    std::vector<RunningRatio> rr = running_ratios(s);
    KahanSum lhs, powers;
    for (std::size_t i = 0; i < s.size(); ++i) {
        lhs.add(s.lambda[i] * std::pow(rr[i].ratio, p));
        powers.add(s.lambda[i] * std::pow(s.a[i], p));
    }
    IneqReport report;
    report.op = "copson";
    report.params = {{"p", p}, {"n", static_cast<double>(s.size())}, {"tol", tol}};
    report.lhs = lhs.value();
    report.rhs = std::pow(p / (p - 1.0), p) * powers.value();
    report.margin = report.rhs - report.lhs;
    report.budget = tol * std::max(1.0, std::fabs(report.lhs));
    report.status =
        report.margin >= -report.budget ? CheckStatus::pass : CheckStatus::fail;
    return report;
}

IneqReport hardy_classical_sides(const std::vector<double>& a, double p,
                                 double tol) {
    check_p(p);
    if (a.empty())
        throw std::invalid_argument("classical bound: need at least one term");
    for (double x : a)
        if (!(x >= 0.0) || !std::isfinite(x))
            throw std::invalid_argument("classical bound: terms must be >= 0");
    // unit-weight path: no lambda factors appear anywhere
    KahanSum A, lhs, powers;
    for (std::size_t i = 0; i < a.size(); ++i) {
        A.add(a[i]);
        double ratio = A.value() / static_cast<double>(i + 1);
        lhs.add(std::pow(ratio, p));
        powers.add(std::pow(a[i], p));
    }
    IneqReport report;
    report.op = "hardy_classical";
    report.params = {{"p", p}, {"n", static_cast<double>(a.size())}, {"tol", tol}};
    report.lhs = lhs.value();
    report.rhs = std::pow(p / (p - 1.0), p) * powers.value();
    report.margin = report.rhs - report.lhs;
    report.budget = tol * std::max(1.0, std::fabs(report.lhs));
    report.status =
        report.margin >= -report.budget ? CheckStatus::pass : CheckStatus::fail;
    return report;
}

std::vector<DeltaBound> delta_chain(const WeightedSeq& s, double p) {
    check_p(p);
    std::vector<RunningRatio> rr = running_ratios(s);
    std::vector<DeltaBound> out;
    out.reserve(s.size());
    double prev_tail = 0.0;  // Lambda_{n-1} * ratio_{n-1}^p
    for (std::size_t i = 0; i < s.size(); ++i) {
        double delta = s.lambda[i] * std::pow(rr[i].ratio, p) -
                       p / (p - 1.0) * s.lambda[i] * s.a[i] *
                           std::pow(rr[i].ratio, p - 1.0);
        double tail = rr[i].Lambda * std::pow(rr[i].ratio, p);
        out.push_back(DeltaBound{delta, (prev_tail - tail) / (p - 1.0)});
        prev_tail = tail;
    }
    return out;
}

double elementary_gap(double x, double y, double p) {
    check_p(p);
    if (!(x >= 0.0 && y >= 0.0))
        throw std::invalid_argument("elementary_gap: x, y must be >= 0");
    return (p - 1.0) * std::pow(x, p) + std::pow(y, p) -
           p * std::pow(x, p - 1.0) * y;
}

}  // namespace hardylab
