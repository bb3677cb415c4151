#pragma once

#include <cstdint>

#include "hardylab/discrete.hpp"
#include "hardylab/weight.hpp"

namespace hardylab {

// Deterministic generator: identical seeds give identical draws on any
// platform (the raw engine output is mapped to doubles explicitly
// instead of going through distribution objects, whose output is
// implementation defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t raw();
    double uniform();                        // [0, 1)
    double uniform(double lo, double hi);    // [lo, hi)
    double uniform_pos(double lo, double hi);  // (lo, hi)
    int uniform_int(int lo, int hi);         // inclusive

private:
    std::uint64_t state_;
};

// Stable per-case seed derivation from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Piecewise power-law weight with up to max_pieces pieces; the piece
// touching 0 keeps exponent <= first_exp_max so the moments used by
// the checks stay integrable.  With nonincreasing set, junctions only
// step down.
Weight random_power_weight(Rng& rng, int max_pieces, double first_exp_max,
                           bool nonincreasing);

// Step weight with values in (0, 10], optionally sorted non-increasing.
Weight random_step_weight(Rng& rng, int max_pieces, bool nonincreasing);

// Weighted sequence with N in [1, max_n], lambda in (0,10], a in
// [0,10] (roughly one term in ten is zero for edge coverage).
WeightedSeq random_sequence(Rng& rng, int max_n);

}  // namespace hardylab
