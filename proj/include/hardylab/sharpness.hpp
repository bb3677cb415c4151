#pragma once

#include <string>
#include <vector>

#include "hardylab/weight.hpp"

namespace hardylab {

// The extremal family g_a(t) = f (1-a) t^(-a), a in (0,1), which keeps
// the total integral equal to f while steepening toward t = 0.
Weight extremal_weight(double f, double a);

// I_0 / I_q for g_a in closed form: (1/(1-a))^q.  Approaches the
// constant (p/(p-1))^q from below as a -> 1/p.
double ratio_J(double a, double p, double q);

// L_q(a) = I_0 - (p/(p-1))^q I_q for g_a in closed form:
//   f^p * (1 - ((1-a) p/(p-1))^q) / (1 - a p)
// Rises to the cap -q f^p/(p-1) from below as a -> 1/p, which shows
// the coefficient q/(p-1) in the average bound cannot be lowered.  (Expanding
// int_0^1 g_a^p = f^p (1-a)^p / (1-ap) is what produces the (1-a)^q
// factor inside the bracket; the quadrature cross-check in the test
// suite pins this form.)
double lq_closed(double a, double p, double q, double f);

struct ScanRow {
    int k;
    double a;        // 1/p - 10^(-k)
    double L;        // lq_closed at a
    double margin;   // -L - q f^p / (p-1), >= 0, shrinking in k
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::vector<int> skipped;  // k values with a <= 0
};

// Evaluate the sharpness margin along a_k = 1/p - 10^(-k).
ScanResult limit_scan(double p, double q, double f, const std::vector<int>& ks);

// CSV wire format: header "k,a,L,margin".
std::string scan_to_csv(const ScanResult& scan);

}  // namespace hardylab
