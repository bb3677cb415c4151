#include "hardylab/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hardylab {

std::uint64_t Rng::raw() {
    // splitmix64 step: full 64-bit period, trivially seedable.
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double Rng::uniform() { return (raw() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::uniform_pos(double lo, double hi) {
    for (;;) {
        double u = uniform();
        if (u > 0.0) return lo + (hi - lo) * u;
    }
}

int Rng::uniform_int(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    return lo + static_cast<int>(raw() % span);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    Rng mix(master ^ (index * 0xD1B54A32D192ED03ull + 0x2545F4914F6CDD1Dull));
    return mix.raw();
}

namespace {

// Interior breakpoints with a guaranteed minimum gap so pieces never
// collapse under rounding.
std::vector<double> random_breakpoints(Rng& rng, int pieces) {
    std::vector<double> gaps(pieces);
    double total = 0.0;
    for (double& g : gaps) {
        g = rng.uniform(0.2, 1.0);
        total += g;
    }
    std::vector<double> cuts;
    cuts.reserve(pieces - 1);
    double acc = 0.0;
    for (int i = 0; i + 1 < pieces; ++i) {
        acc += gaps[i];
        cuts.push_back(acc / total);
    }
    return cuts;
}

}  // namespace

Weight random_power_weight(Rng& rng, int max_pieces, double first_exp_max,
                           bool nonincreasing) {
    if (max_pieces < 1)
        throw std::invalid_argument("random weight: need max_pieces >= 1");
    if (!(first_exp_max >= 0.0) || !(first_exp_max < 1.0))
        throw std::invalid_argument("random weight: first_exp_max in [0,1)");
    int n = rng.uniform_int(1, max_pieces);
    std::vector<double> cuts = random_breakpoints(rng, n);

    std::vector<PowerPiece> pieces;
    pieces.reserve(n);
    double lo = 0.0;
    double junction_value = 0.0;
    for (int i = 0; i < n; ++i) {
        double hi = i + 1 == n ? 1.0 : cuts[i];
        PowerPiece piece;
        piece.lo = lo;
        piece.hi = hi;
        piece.exponent = i == 0 ? rng.uniform(0.0, first_exp_max)
                                : rng.uniform(0.0, 0.9);
        if (i == 0) {
            piece.coeff = rng.uniform_pos(0.0, 10.0);
        } else {
            // Pin the left-junction value relative to the previous
            // piece's value there, so monotonicity is a choice of the
            // drop factor rather than an accident.
            double drop = nonincreasing ? rng.uniform_pos(0.0, 1.0)
                                        : rng.uniform_pos(0.25, 2.5);
            piece.coeff = junction_value * drop * std::pow(lo, piece.exponent);
        }
        junction_value = piece.coeff * std::pow(hi, -piece.exponent);
        pieces.push_back(piece);
        lo = hi;
    }
    return Weight(std::move(pieces));
}

Weight random_step_weight(Rng& rng, int max_pieces, bool nonincreasing) {
    if (max_pieces < 1)
        throw std::invalid_argument("random weight: need max_pieces >= 1");
    int n = rng.uniform_int(1, max_pieces);
    std::vector<double> values(n);
    for (double& v : values) v = rng.uniform_pos(0.0, 10.0);
    if (nonincreasing) std::sort(values.rbegin(), values.rend());
    return Weight::step(values, random_breakpoints(rng, n));
}

WeightedSeq random_sequence(Rng& rng, int max_n) {
    if (max_n < 1)
        throw std::invalid_argument("random sequence: need max_n >= 1");
    int n = rng.uniform_int(1, max_n);
    std::vector<double> lambda(n), a(n);
    for (int i = 0; i < n; ++i) {
        lambda[i] = rng.uniform_pos(0.0, 10.0);
        a[i] = rng.uniform_int(0, 9) == 0 ? 0.0 : rng.uniform(0.0, 10.0);
    }
    return WeightedSeq(std::move(lambda), std::move(a));
}

}  // namespace hardylab
