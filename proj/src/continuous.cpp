#include "hardylab/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hardylab/errors.hpp"

namespace hardylab {

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const double kNaN = std::numeric_limits<double>::quiet_NaN();

// Exact integral of C * t^(-A) over [x0, x1] (A < 1 when x0 == 0).
double exact_power_part(double C, double A, double x0, double x1,
                        double* rounding) {
    if (C == 0.0 || x1 <= x0) return 0.0;
    double value;
    const double h = 1.0 - A;
    if (x0 == 0.0) {
        value = C * std::pow(x1, h) / h;
    } else if (h == 0.0) {
        value = C * std::log(x1 / x0);
    } else {
        value = C * std::pow(x0, h) * std::expm1(h * std::log(x1 / x0)) / h;
    }
    *rounding += 1e-14 * std::fabs(value);
    return value;
}

}  // namespace

QuadResult integrate_product(const Weight& w, double t0, double t1,
                             double alpha, double beta, const QuadSpec& spec) {
    spec.validate();
    if (!(alpha >= 0.0 && beta >= 0.0))
        throw std::invalid_argument("integrate_product: alpha, beta must be >= 0");
    if (!(t0 >= 0.0 && t0 < t1 && t1 <= 1.0))
        throw std::domain_error("integrate_product: need 0 <= t0 < t1 <= 1");

    const PowerPiece& first = w.pieces().front();
    double value = 0.0, error = 0.0;
    double smooth_from = t0;

    // On the piece touching 0 the Hardy average is coeff/(1-a) * t^(-a),
    // so the whole integrand is C * t^(-a(alpha+beta)): closed form, and
    // the only place a divergence can occur.
    if (t0 < first.hi) {
        const double a = first.exponent;
        const double growth = a * (alpha + beta);
        const double C =
            std::pow(first.coeff / (1.0 - a), alpha) * std::pow(first.coeff, beta);
        if (t0 == 0.0 && C > 0.0 && growth >= 1.0)
            return QuadResult{kInf, 0.0, true, 0};
        double x1 = std::min(t1, first.hi);
        value += exact_power_part(C, growth, t0, x1, &error);
        smooth_from = x1;
    }
    if (smooth_from >= t1) return QuadResult{value, error, false, 0};

    // Elsewhere the integrand is smooth within each piece.
    std::vector<double> bounds{smooth_from};
    for (const PowerPiece& p : w.pieces())
        if (p.hi > smooth_from && p.hi < t1) bounds.push_back(p.hi);
    bounds.push_back(t1);
    auto integrand = [&](double t) {
        return std::pow(w.hardy_average(t), alpha) * std::pow(w.eval(t), beta);
    };
    QuadResult smooth = adaptive_gauss(integrand, bounds, spec);
    return QuadResult{value + smooth.value, error + smooth.error, false,
                      smooth.panels};
}

QuadResult interpolated_norm(const Weight& w, double p, double s,
                             const QuadSpec& spec) {
    if (!(p > 1.0))
        throw std::invalid_argument("interpolated_norm: p must be > 1");
    if (!(s >= 0.0 && s <= p))
        throw std::invalid_argument("interpolated_norm: s must lie in [0, p]");
    return integrate_product(w, 0.0, 1.0, p - s, s, spec);
}

IneqReport theorem1_sides(const Weight& w, const TheoremParams& params,
                          const QuadSpec& spec) {
    const double p = params.p, q = params.q, f = params.f;
    if (!(p > 1.0)) throw std::invalid_argument("theorem1: p must be > 1");
    if (!(q >= 1.0 && q <= p))
        throw std::invalid_argument("theorem1: q must lie in [1, p]");
    if (!(f > 0.0) || !std::isfinite(f))
        throw std::invalid_argument("theorem1: f must be positive and finite");

    IneqReport report;
    report.op = "theorem1";
    report.params = {{"p", p}, {"q", q}, {"f", f}};

    QuadResult i0 = integrate_product(w, 0.0, 1.0, p, 0.0, spec);
    QuadResult iq = integrate_product(w, 0.0, 1.0, p - q, q, spec);
    const double kq = std::pow(p / (p - 1.0), q);
    const double tail = q / (p - 1.0) * std::pow(f, p);
    if (i0.divergent || iq.divergent) {
        report.lhs = i0.divergent ? kInf : i0.value;
        report.rhs = iq.divergent ? kInf : kq * iq.value - tail;
        report.margin = kNaN;
        report.budget = 0.0;
        report.status = CheckStatus::divergent;
        return report;
    }
    report.lhs = i0.value;
    report.rhs = kq * iq.value - tail;
    report.margin = report.rhs - report.lhs;
    report.budget = i0.error + kq * iq.error +
                    rounding_floor({report.lhs, report.rhs, tail});
    report.status = report.margin >= -report.budget ? CheckStatus::pass
                                                    : CheckStatus::fail;
    return report;
}

IneqReport corollary1_sides(const Weight& w, double p, const QuadSpec& spec) {
    double f = w.total_integral();
    IneqReport report = theorem1_sides(w, TheoremParams{p, 1.0, f}, spec);
    report.op = "corollary1";
    return report;
}

ValueWithBudget lemma1_residual(const Weight& w, double p, double delta,
                                const QuadSpec& spec) {
    if (!(p > 1.0)) throw std::invalid_argument("lemma1: p must be > 1");
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("lemma1: delta must lie in (0, 1]");
    if (!w.is_nonincreasing())
        throw precondition_error("lemma1: weight must be non-increasing");

    QuadResult lhs = integrate_product(w, 0.0, delta, p, 0.0, spec);
    QuadResult cross = integrate_product(w, 0.0, delta, p - 1.0, 1.0, spec);
    if (lhs.divergent || cross.divergent) return ValueWithBudget{kNaN, 0.0, true};

    const double prefix = w.prefix_integral(delta, 1.0);
    const double boundary = std::pow(prefix, p) / std::pow(delta, p - 1.0);
    const double rhs =
        -boundary / (p - 1.0) + p / (p - 1.0) * cross.value;
    double budget = lhs.error + p / (p - 1.0) * cross.error +
                    rounding_floor({lhs.value, rhs, boundary});
    return ValueWithBudget{lhs.value - rhs, budget, false};
}

ValueWithBudget holder_interpolation_gap(const Weight& w, double p, double q,
                                         const QuadSpec& spec) {
    if (!(p > 1.0)) throw std::invalid_argument("interpolation: p must be > 1");
    if (!(q > 1.0 && q <= p))
        throw std::invalid_argument("interpolation: q must lie in (1, p]");
    QuadResult i0 = integrate_product(w, 0.0, 1.0, p, 0.0, spec);
    QuadResult i1 = integrate_product(w, 0.0, 1.0, p - 1.0, 1.0, spec);
    QuadResult iq = integrate_product(w, 0.0, 1.0, p - q, q, spec);
    if (i0.divergent || i1.divergent || iq.divergent)
        return ValueWithBudget{kNaN, 0.0, true};
    const double wq = std::pow(iq.value, 1.0 / q);
    const double w0 = std::pow(i0.value, (q - 1.0) / q);
    double gap = wq * w0 - i1.value;
    // first-order error propagation through the two fractional powers
    double budget = i1.error +
                    (iq.value > 0 ? wq * w0 / (q * iq.value) * iq.error : 0.0) +
                    (i0.value > 0 ? wq * w0 * (q - 1.0) / (q * i0.value) * i0.error : 0.0) +
                    rounding_floor({i1.value, wq * w0});
    return ValueWithBudget{gap, budget, false};
}

double g_eval(double x, double q, double p, double f) {
    if (!(x > 0.0)) throw std::invalid_argument("g_eval: x must be > 0");
    if (!(q >= 1.0)) throw std::invalid_argument("g_eval: q must be >= 1");
    if (!(p > 1.0)) throw std::invalid_argument("g_eval: p must be > 1");
    if (!(f > 0.0)) throw std::invalid_argument("g_eval: f must be > 0");
    const double shift = std::pow(f, p) / (p - 1.0);
    return x - std::pow(x, 1.0 - q) * std::pow(x + shift, q);
}

double f_eval(double t, double q) {
    if (!(t >= 1.0)) throw std::invalid_argument("f_eval: t must be >= 1");
    if (!(q > 1.0)) throw std::invalid_argument("f_eval: q must be > 1");
    return 1.0 + (q - 1.0) * std::pow(t, q) - q * std::pow(t, q - 1.0);
}

IneqReport lemma1_report(const Weight& w, double p, double delta,
                         const QuadSpec& spec) {
    IneqReport report;
    report.op = "lemma1";
    report.params = {{"p", p}, {"delta", delta}};
    ValueWithBudget r = lemma1_residual(w, p, delta, spec);
    if (r.divergent) {
        report.lhs = kInf;
        report.rhs = kInf;
        report.margin = kNaN;
        report.status = CheckStatus::divergent;
        return report;
    }
    QuadResult lhs = integrate_product(w, 0.0, delta, p, 0.0, spec);
    report.lhs = lhs.value;
    report.rhs = lhs.value - r.value;
    report.margin = -r.value;
    report.budget = r.budget;
    // identity: both directions must hold within ten budgets
    report.status = std::fabs(r.value) <= 10.0 * r.budget ? CheckStatus::pass
                                                          : CheckStatus::fail;
    return report;
}

IneqReport interpolation_report(const Weight& w, double p, double q,
                                const QuadSpec& spec) {
    IneqReport report;
    report.op = "interpolation";
    report.params = {{"p", p}, {"q", q}};
    ValueWithBudget r = holder_interpolation_gap(w, p, q, spec);
    if (r.divergent) {
        report.lhs = kInf;
        report.rhs = kInf;
        report.margin = kNaN;
        report.status = CheckStatus::divergent;
        return report;
    }
    report.lhs = 0.0;  // checks gap >= 0
    report.rhs = r.value;
    report.margin = r.value;
    report.budget = r.budget;
    report.status = r.value >= -r.budget ? CheckStatus::pass : CheckStatus::fail;
    return report;
}

}  // namespace hardylab
