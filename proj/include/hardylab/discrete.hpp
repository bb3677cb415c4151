#pragma once

#include <string>
#include <vector>

#include "hardylab/report.hpp"

namespace hardylab {

// A finite weighted sequence: weights lambda_n > 0 and terms a_n >= 0.
struct WeightedSeq {
    std::vector<double> lambda;
    std::vector<double> a;

    WeightedSeq(std::vector<double> lambda_, std::vector<double> a_);
    std::size_t size() const { return lambda.size(); }
};

// CSV wire format: header "lambda,a", one row per term.
WeightedSeq seq_from_csv(const std::string& text);

struct RunningRatio {
    double A;        // sum of lambda_i * a_i up to n
    double Lambda;   // sum of lambda_i up to n
    double ratio;    // A / Lambda
};

// Prefix sums and their ratios, accumulated left to right with
// compensated summation.
std::vector<RunningRatio> running_ratios(const WeightedSeq& s);

// Weighted discrete Hardy bound with the boundary correction term:
//   sum lambda_n (A_n/Lambda_n)^p
//     <= p/(p-1) * sum lambda_n a_n (A_n/Lambda_n)^(p-1)
//        - 1/(p-1) * Lambda_N (A_N/Lambda_N)^p
// Equality holds when all a_n are equal (and for N == 1).
IneqReport theorem2_sides(const WeightedSeq& s, double p, double tol = 1e-9);

// Weighted Copson bound: same lhs against (p/(p-1))^p sum lambda_n a_n^p.
IneqReport copson_sides(const WeightedSeq& s, double p, double tol = 1e-9);

// Classical Hardy bound (lambda == 1), computed by a lambda-free path
// that matches theorem2_sides bit for bit when fed unit weights.
IneqReport hardy_classical_sides(const std::vector<double>& a, double p,
                                 double tol = 1e-9);

// The summand-by-summand certificate behind theorem2_sides:
//   delta_n = lambda_n r_n^p - p/(p-1) lambda_n a_n r_n^(p-1)
//   bound_n = 1/(p-1) * (Lambda_{n-1} r_{n-1}^p - Lambda_n r_n^p)
// with the n = 1 convention Lambda_0 r_0^p = 0, which makes bound_1
// coincide with delta_1 and the bounds telescope to
// -1/(p-1) Lambda_N r_N^p (both up to roundoff).
struct DeltaBound {
    double delta;
    double bound;
};
std::vector<DeltaBound> delta_chain(const WeightedSeq& s, double p);

// (p-1) x^p + y^p - p x^(p-1) y; nonnegative for x, y >= 0, p > 1,
// zero at x == y.
double elementary_gap(double x, double y, double p);

}  // namespace hardylab
