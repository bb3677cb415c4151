#pragma once

#include <stdexcept>
#include <string>

namespace hardylab {

// Input text that fails to parse (weight JSON, sequence CSV).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was invoked on data that violates its stated premise,
// e.g. rearranging a non-step weight or running the constant pipeline
// on a weight that is not non-increasing.
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature ran out of panels before meeting its tolerance
// target.  Carries the best estimate and the error bound it reached.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double estimate_, double bound_)
        : std::runtime_error(what), estimate(estimate_), bound(bound_) {}
    double estimate;
    double bound;
};

// A root solve failed its own consistency checks (residual too large,
// or more than one sign change across the bracket).
class solver_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hardylab
