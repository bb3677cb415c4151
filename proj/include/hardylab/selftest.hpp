#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hardylab {

inline constexpr std::uint64_t kDefaultSeed = 20240117ull;

// One named property check: how many cases ran, how many violated the
// stated tolerance, and the smallest slack seen (distance to the
// failure threshold; negative means a violation).
struct CheckResult {
    std::string suite;
    std::string name;
    long cases = 0;
    long failures = 0;
    double worst = 0.0;
    std::string note;

    bool pass() const { return failures == 0; }
};

// Runs the property suites at desk scale.  suites may name a subset of
// {"weight","discrete","continuous","sharpness","rhi","rearrange"};
// empty means all.  Identical seeds give identical results.
std::vector<CheckResult> run_checks(std::uint64_t seed,
                                    const std::vector<std::string>& suites);

// Deterministic JSON summary (per-suite aggregation plus every check);
// contains no wall-clock data so identical runs serialize identically.
nlohmann::json selftest_report(const std::vector<CheckResult>& checks,
                               std::uint64_t seed);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace hardylab
