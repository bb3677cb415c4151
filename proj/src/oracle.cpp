#include "hardylab/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hardylab {

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const double kPiHalf = 1.5707963267948966;

// One tanh-sinh level: nodes u = k*h (all k at level 0, odd k after),
// abscissas folded toward both endpoints through the distance
//   delta(u) = half * (1 - tanh(pi/2 sinh u))
// computed via exp to keep full precision when delta is tiny.
struct LevelSum {
    double raw = 0.0;  // sum of weight * f over the level's nodes
};

}  // namespace

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_level) {
    if (!(a < b)) throw std::invalid_argument("tanh_sinh: need a < b");
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double u_max = 6.0;

    // weight * (f(right node) + f(left node)) at parameter u > 0
    auto node_pair = [&](double u) -> double {
        double y = kPiHalf * std::sinh(u);
        double cy = std::cosh(y);
        double weight = kPiHalf * std::cosh(u) / (cy * cy);
        double e = std::exp(-2.0 * y);
        double delta = half * 2.0 * e / (1.0 + e);
        double acc = 0.0;
        double xr = b - delta;
        if (xr < b || delta == 0.0) acc += f(xr);
        double xl = a + delta;
        if (xl > a) acc += f(xl);
        return weight * acc;
    };

    double h = 1.0;
    double raw = kPiHalf * f(mid);  // u = 0 node
    for (double u = h; u <= u_max; u += h) {
        double t = node_pair(u);
        raw += t;
        if (u >= 3.0 && std::fabs(t) <= 1e-18 * std::fabs(raw)) break;
    }
    double integral = half * h * raw;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        int negligible = 0;
        for (double u = h; u <= u_max; u += 2.0 * h) {
            double t = node_pair(u);
            raw += t;
            if (u >= 3.0 && std::fabs(t) <= 1e-18 * std::fabs(raw)) {
                if (++negligible >= 4) break;
            } else {
                negligible = 0;
            }
        }
        double refined = half * h * raw;
        double change = std::fabs(refined - integral);
        integral = refined;
        if (change <= rel_tol * std::fabs(refined) + 1e-300) break;
    }
    return integral;
}

double oracle_power_integral(const Weight& w, double t0, double t1, double r,
                             double rel_tol) {
    if (!(r >= 0.0)) throw std::invalid_argument("oracle: r must be >= 0");
    if (!(t0 >= 0.0 && t0 <= t1 && t1 <= 1.0))
        throw std::domain_error("oracle: need 0 <= t0 <= t1 <= 1");
    if (t0 == t1) return 0.0;
    const PowerPiece& first = w.pieces().front();
    if (t0 == 0.0 && first.coeff > 0.0 && first.exponent * r >= 1.0) return kInf;
    double total = 0.0;
    for (const PowerPiece& p : w.pieces()) {
        if (p.hi <= t0) continue;
        if (p.lo >= t1) break;
        double lo = std::max(p.lo, t0), hi = std::min(p.hi, t1);
        if (!(lo < hi)) continue;
        auto g = [&](double s) { return std::pow(p.coeff * std::pow(s, -p.exponent), r); };
        total += tanh_sinh(g, lo, hi, rel_tol);
    }
    return total;
}

double oracle_product_integral(const Weight& w, double t0, double t1,
                               double alpha, double beta, double rel_tol) {
    if (!(alpha >= 0.0 && beta >= 0.0))
        throw std::invalid_argument("oracle: alpha, beta must be >= 0");
    if (!(t0 >= 0.0 && t0 <= t1 && t1 <= 1.0))
        throw std::domain_error("oracle: need 0 <= t0 <= t1 <= 1");
    if (t0 == t1) return 0.0;
    const PowerPiece& first = w.pieces().front();
    if (t0 == 0.0 && first.coeff > 0.0 && first.exponent * (alpha + beta) >= 1.0)
        return kInf;
    double total = 0.0;
    for (const PowerPiece& p : w.pieces()) {
        if (p.hi <= t0) continue;
        if (p.lo >= t1) break;
        double lo = std::max(p.lo, t0), hi = std::min(p.hi, t1);
        if (!(lo < hi)) continue;
        auto g = [&](double s) {
            return std::pow(w.hardy_average(s), alpha) *
                   std::pow(p.coeff * std::pow(s, -p.exponent), beta);
        };
        total += tanh_sinh(g, lo, hi, rel_tol);
    }
    return total;
}

}  // namespace hardylab
