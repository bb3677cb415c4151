#pragma once

#include <string>
#include <vector>

namespace hardylab {

// One piece of a piecewise power-law weight: t -> coeff * t^(-exponent)
// on the interval (lo, hi].
struct PowerPiece {
    double lo = 0.0;
    double hi = 1.0;
    double coeff = 1.0;     // >= 0
    double exponent = 0.0;  // the positive a in t^(-a); >= 0
};

// A weight on (0,1]: an ordered list of power pieces forming an exact
// partition of (0,1].  Instances are immutable; the constructor checks
// every invariant eagerly (partition with no gaps, coeff >= 0 with at
// least one positive, exponent >= 0, and exponent < 1 on the piece
// touching 0 so that the weight itself is integrable).
//
// Integrals of w^r have closed forms piece by piece, so prefix
// integrals, Hardy averages and interval averages never need numeric
// quadrature and carry only rounding error.  A divergent prefix
// integral (first-piece exponent * r >= 1) is reported as +infinity,
// never as an error.
class Weight {
public:
    explicit Weight(std::vector<PowerPiece> pieces);

    // w identically equal to `value` on (0,1].
    static Weight constant(double value);

    // Step weight: values[i] on (breakpoints[i-1], breakpoints[i]] with
    // the outer endpoints 0 and 1 implied.  Breakpoints must be strictly
    // increasing inside (0,1); values must be >= 0 with one positive.
    static Weight step(const std::vector<double>& values,
                       const std::vector<double>& breakpoints);

    // Single-piece power law coeff * t^(-a) on (0,1]; requires a < 1.
    static Weight power(double coeff, double a);

    const std::vector<PowerPiece>& pieces() const { return pieces_; }

    bool is_step() const;            // every exponent == 0
    bool is_nonincreasing() const;   // junction values never step up

    // Pointwise value at t in (0,1]; breakpoints evaluate on the left
    // piece (pieces are right-closed).
    double eval(double t) const;

    // Integral of w(s)^r over (t0, t1], 0 <= t0 <= t1 <= 1, in closed
    // form; +infinity when t0 == 0 and the first piece makes w^r
    // non-integrable.  r must be >= 0.
    double range_integral(double t0, double t1, double r) const;

    // Integral of w^r over (0, t], t in (0,1].
    double prefix_integral(double t, double r) const;

    // Hardy average (1/t) * integral of w over (0,t].
    double hardy_average(double t) const;

    double total_integral() const { return range_integral(0.0, 1.0, 1.0); }

    // Same shape with every coeff multiplied by k > 0.
    Weight scaled(double k) const;

private:
    std::vector<PowerPiece> pieces_;
    const PowerPiece& piece_at(double t) const;
};

// Wire format: {"pieces":[{"lo":0.0,"hi":0.5,"coeff":2.0,"exp":0.0},...]}
// Throws parse_error on malformed text, std::invalid_argument when the
// parsed pieces violate a Weight invariant.
Weight weight_from_json(const std::string& text);
std::string weight_to_json(const Weight& w);

}  // namespace hardylab
