#pragma once

#include <functional>
#include <vector>

namespace hardylab {

// Tolerances and budget for adaptive Gauss-Legendre integration.
struct QuadSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int panel_order = 16;   // nodes per panel, >= 2
    int max_panels = 4096;
    void validate() const;  // throws std::invalid_argument
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;     // accumulated error estimate
    bool divergent = false;
    int panels = 0;
};

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Cached Gauss-Legendre rule of the given order (thread safe).
const GaussRule& gauss_rule(int order);

// Integrate f over [bounds.front(), bounds.back()] with the interior
// bounds as mandatory initial splits (callers put integrand kinks
// there).  Panels are refined globally worst-first until the combined
// error estimate meets max(abs_tol, rel_tol*|value|).  Throws
// accuracy_error when max_panels is exhausted first.
QuadResult adaptive_gauss(const std::function<double(double)>& f,
                          const std::vector<double>& bounds,
                          const QuadSpec& spec);

}  // namespace hardylab
