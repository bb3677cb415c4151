#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hardylab/quadrature.hpp"
#include "hardylab/report.hpp"
#include "hardylab/weight.hpp"

namespace hardylab {

// Interval families over which the reverse Holder ratio is maximized:
// prefixes (0,t], suffixes (t,1], or all subintervals (a,b].
enum class IntervalFamily { prefix, suffix, all };

IntervalFamily family_from_string(const std::string& name);  // parse_error
const char* family_name(IntervalFamily f);

// avg(w^q) / avg(w)^q over (a, b]; 1 when w vanishes on the interval.
double interval_ratio(const Weight& w, double q, double a, double b);

struct RhiSearch {
    double c = 1.0;            // best ratio found (the constant), or +inf
    double uncertainty = 0.0;  // grid resolution carried by the estimate
    double arg_lo = 0.0;       // interval attaining the best ratio
    double arg_hi = 1.0;
    bool divergent = false;    // first-piece exponent * q >= 1
};

// Supremum of the ratio over the family, located on a breakpoint-
// anchored grid (all piece boundaries plus linear and geometric points)
// and refined by golden-section (coordinate descent for the pair
// family).  grid >= 64 is the per-axis grid size.
RhiSearch rhi_constant_search(const Weight& w, double q, IntervalFamily family,
                              int grid = 256);
double rhi_constant(const Weight& w, double q, IntervalFamily family,
                    int grid = 256);

// The exponent where the constant pipeline degenerates: the root
// p0 > q of  c * (p-q)/p * (p/(p-1))^q = 1.  Returns +inf when c == 1
// (or when no sign change appears below 2^64).  The solve brackets by
// doubling, bisects to 1e-12 relative, checks the residual, and
// rejects brackets with more than one sign change.
double p0_solve(double q, double c);

// k_p = 1 - c (p-q)/p (p/(p-1))^q, positive exactly for p < p0.
// Throws std::domain_error when p >= p0 (k_p <= 0).
double k_p(double p, double q, double c);

// c' = q c / (p k_p); equals c exactly at p == q, grows without bound
// as p -> p0.
double c_prime(double p, double q, double c);

// phi_y(x) = x^(p/q-1) y - (p-q)/p x^(p/q), nonincreasing in x >= y.
double phi_y(double x, double y, double p, double q);

// Verifies, for delta on a geometric grid of (0,1] joined with the
// piece breakpoints, the promoted reverse Holder bound
//   avg_{(0,d]}(w^p) <= c' * avg_{(0,d]}(w)^p
// and the intermediate bound
//   avg_{(0,d]}((Aw)^(p-q) w^q) <= c' * avg_{(0,d]}(w)^p
// where c = rhi_constant(w, q, prefix) and q <= p < p0(q, c).
// Requires non-increasing w.  The report carries the worst delta.
IneqReport theorem3_verify(const Weight& w, double q, double p,
                           const QuadSpec& spec = {}, int grid = 256);

struct RhiRangeRow {
    double p;
    double k_p;
    double c_prime;
    bool verified;
};

// Output bundle of the constant pipeline: the family constant c, the
// degeneration exponent p0, and a per-p table of promoted constants,
// each row verified against the weight itself.
struct RhiRange {
    double q = 0.0;
    IntervalFamily family = IntervalFamily::prefix;
    double c = 1.0;
    double c_uncertainty = 0.0;
    double p0 = 0.0;
    bool divergent = false;
    std::vector<RhiRangeRow> table;

    nlohmann::json to_json() const;  // {"c":..,"p0":..,"table":[...]}
    bool all_verified() const;
};

// End-to-end pipeline on a non-increasing weight: c over the requested
// family, p0, and p_grid rows spanning [q, p0) (or [q, 4q) when
// p0 = +inf).  Rows verify the promoted bound over the same family:
// prefix rows use theorem3_verify; suffix rows check the mirrored
// suffix averages; the pair family checks both.
RhiRange analyze_weight(const Weight& w, double q, IntervalFamily family,
                        int grid = 256, int p_grid = 16,
                        const QuadSpec& spec = {});

// The weight t^(-1/p0) attaining the constant: its ratio over every
// prefix equals c (certified against c to 1e-10 relative), and its
// p0-th power just fails integrability, witnessed by truncated
// integrals over (eps,1] growing by ln 2 per halving of eps.
struct ExtremalRhi {
    Weight weight;
    double p0;
    double a;                 // 1/p0
    double cert_residual;     // |(1-a)^q/(1-aq) - c|
    std::vector<std::pair<double, double>> truncated;  // (eps, integral)
};
ExtremalRhi extremal_rhi(double q, double c);

}  // namespace hardylab
