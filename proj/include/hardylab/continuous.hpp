#pragma once

#include "hardylab/quadrature.hpp"
#include "hardylab/report.hpp"
#include "hardylab/weight.hpp"

namespace hardylab {

// Integral over (t0, t1] of (Aw)^alpha * w^beta where Aw is the Hardy
// average of w.  On the piece touching 0 the integrand is an exact
// power of t and is integrated in closed form; everywhere else it is
// smooth and handled by adaptive Gauss panels split at piece
// boundaries.  alpha, beta >= 0.  Divergence at 0 (first-piece
// exponent * (alpha+beta) >= 1) comes back as QuadResult.divergent.
QuadResult integrate_product(const Weight& w, double t0, double t1,
                             double alpha, double beta,
                             const QuadSpec& spec = {});

// I_s = integral over (0,1] of (Aw)^(p-s) w^s, for 0 <= s <= p.
QuadResult interpolated_norm(const Weight& w, double p, double s,
                             const QuadSpec& spec = {});

struct TheoremParams {
    double p;   // > 1
    double q;   // in [1, p]
    double f;   // total integral of the weight
};

// Hardy-average power bound:
//   I_0 <= (p/(p-1))^q I_q - q/(p-1) * f^p
// Strict for q > 1; equality at q == 1 when w is non-increasing.
IneqReport theorem1_sides(const Weight& w, const TheoremParams& params,
                          const QuadSpec& spec = {});

// The q == 1 specialization, same computation path bit for bit.
IneqReport corollary1_sides(const Weight& w, double p,
                            const QuadSpec& spec = {});

struct ValueWithBudget {
    double value = 0.0;
    double budget = 0.0;
    bool divergent = false;
};

// Residual of the prefix identity for non-increasing w:
//   int_0^d (Aw)^p  =  -1/(p-1) (int_0^d w)^p / d^(p-1)
//                      + p/(p-1) int_0^d (Aw)^(p-1) w
// Zero up to quadrature error; throws precondition_error when w is not
// non-increasing.
ValueWithBudget lemma1_residual(const Weight& w, double p, double delta,
                                const QuadSpec& spec = {});

// I_q^(1/q) * I_0^((q-1)/q) - I_1 for q in (1, p]; nonnegative, and
// zero when (Aw)^(p-q) w^q and (Aw)^p are proportional (single-piece
// power weights).
ValueWithBudget holder_interpolation_gap(const Weight& w, double p, double q,
                                         const QuadSpec& spec = {});

// G(x) = x - x^(1-q) (x + f^p/(p-1))^q: strictly increasing in x > 0
// for q > 1 with limit -q f^p/(p-1), constant at q == 1.
double g_eval(double x, double q, double p, double f);

// F(t) = 1 + (q-1) t^q - q t^(q-1): zero at t == 1, positive for t > 1.
double f_eval(double t, double q);

// IneqReport wrappers for the identity-style checks above (pass iff
// |margin| <= 10 * budget for lemma1, margin >= -budget for the gap).
IneqReport lemma1_report(const Weight& w, double p, double delta,
                         const QuadSpec& spec = {});
IneqReport interpolation_report(const Weight& w, double p, double q,
                                const QuadSpec& spec = {});

}  // namespace hardylab
