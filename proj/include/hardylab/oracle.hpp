#pragma once

#include <functional>

#include "hardylab/weight.hpp"

namespace hardylab {

// Independent integration route used to cross-check the closed forms
// and the Gauss-panel machinery.  Tanh-sinh (double-exponential)
// quadrature with level doubling: it shares no code with either
// production path and absorbs the algebraic endpoint singularities the
// weights produce at t = 0.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, int max_level = 12);

// Integral of w^r over (t0, t1], integrated piece by piece with
// tanh_sinh (never through the closed forms).
double oracle_power_integral(const Weight& w, double t0, double t1, double r,
                             double rel_tol = 1e-12);

// Integral of (Aw)^alpha w^beta over (t0, t1] by the same route.
double oracle_product_integral(const Weight& w, double t0, double t1,
                               double alpha, double beta,
                               double rel_tol = 1e-12);

}  // namespace hardylab
