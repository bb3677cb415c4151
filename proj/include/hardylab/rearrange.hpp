#pragma once

#include <json.hpp>

#include "hardylab/rhi.hpp"
#include "hardylab/weight.hpp"

namespace hardylab {

// Non-increasing rearrangement of a step weight: the same values with
// the same total lengths, sorted in decreasing order.  Already
// non-increasing inputs are returned unchanged (exact idempotence).
// Throws precondition_error for non-step weights.
Weight rearrange_nonincreasing(const Weight& w);

// Rearranging never increases the all-intervals reverse Holder
// constant.  Both constants come from the same grid search, so the
// comparison allows the reported grid resolution plus a 1e-6 relative
// slack.
struct RearrangeReport {
    double q = 0.0;
    double c_before = 1.0;
    double c_after = 1.0;
    IntervalFamily family = IntervalFamily::all;
    double resolution = 0.0;
    bool pass = false;
    Weight rearranged = Weight::constant(1.0);

    nlohmann::json to_json() const;
};
RearrangeReport theoremC_check(const Weight& w, double q, int grid = 256);

// For non-increasing weights the all-intervals constant is attained on
// a prefix or a suffix, so c_all should match max(c_prefix, c_suffix)
// within the search resolution.
struct EndpointFamilyReport {
    double q = 0.0;
    double c_all = 1.0;
    double c_prefix = 1.0;
    double c_suffix = 1.0;
    double tolerance = 0.0;
    bool pass = false;

    nlohmann::json to_json() const;
};
EndpointFamilyReport theoremD_check(const Weight& w, double q, int grid = 256);

}  // namespace hardylab
