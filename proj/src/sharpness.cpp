#include "hardylab/sharpness.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hardylab {

namespace {

void check_pq(double p, double q) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("sharpness scan: need p > 1");
    if (!(q >= 1.0) || !(q <= p))
        throw std::invalid_argument("sharpness scan: need 1 <= q <= p");
}

}  // namespace

Weight extremal_weight(double f, double a) {
    if (!(f > 0.0) || !std::isfinite(f))
        throw std::invalid_argument("extremal weight: need f > 0");
    if (!(a > 0.0) || !(a < 1.0))
        throw std::invalid_argument("extremal weight: need 0 < a < 1");
    return Weight::power(f * (1.0 - a), a);
}

double ratio_J(double a, double p, double q) {
    check_pq(p, q);
    if (!(a > 0.0) || !(a < 1.0 / p))
        throw std::invalid_argument("ratio_J: need 0 < a < 1/p");
    return std::pow(1.0 / (1.0 - a), q);
}

double lq_closed(double a, double p, double q, double f) {
    check_pq(p, q);
    if (!(f > 0.0) || !std::isfinite(f))
        throw std::invalid_argument("lq_closed: need f > 0");
    if (!(a > 0.0) || !(a < 1.0 / p))
        throw std::invalid_argument("lq_closed: need 0 < a < 1/p");
    double bracket = 1.0 - std::pow((1.0 - a) * p / (p - 1.0), q);
    return std::pow(f, p) * bracket / (1.0 - a * p);
}

ScanResult limit_scan(double p, double q, double f,
                      const std::vector<int>& ks) {
    check_pq(p, q);
    if (!(f > 0.0) || !std::isfinite(f))
        throw std::invalid_argument("limit scan: need f > 0");
    ScanResult out;
    double floor_term = q * std::pow(f, p) / (p - 1.0);
    for (int k : ks) {
        if (k < 1) throw std::invalid_argument("limit scan: need k >= 1");
        double a = 1.0 / p - std::pow(10.0, -k);
        if (!(a > 0.0)) {
            out.skipped.push_back(k);
            continue;
        }
        double L = lq_closed(a, p, q, f);
        out.rows.push_back(ScanRow{k, a, L, -L - floor_term});
    }
    return out;
}

std::string scan_to_csv(const ScanResult& scan) {
    std::string csv = "k,a,L,margin\n";
    char buf[160];
    for (const ScanRow& row : scan.rows) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g\n", row.k, row.a,
                      row.L, row.margin);
        csv += buf;
    }
    return csv;
}

}  // namespace hardylab
