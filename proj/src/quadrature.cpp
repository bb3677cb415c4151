#include "hardylab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>

#include "hardylab/errors.hpp"

namespace hardylab {

void QuadSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("quadrature: tolerances must be positive");
    if (panel_order < 2 || panel_order > 64)
        throw std::invalid_argument("quadrature: panel order must lie in [2, 64]");
    if (max_panels < 1)
        throw std::invalid_argument("quadrature: max_panels must be >= 1");
}

namespace {

// Nodes and weights by Newton iteration on the Legendre recurrence;
// accurate to a few ulps for the orders allowed here.
GaussRule make_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

struct Segment {
    double lo, hi;
    double value;  // two half panels
    double error;  // |one panel - two half panels|
};

struct WorseError {
    bool operator()(const Segment& a, const Segment& b) const {
        return a.error < b.error;
    }
};

double panel(const std::function<double(double)>& f, const GaussRule& rule,
             double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

Segment evaluate(const std::function<double(double)>& f, const GaussRule& rule,
                 double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    double whole = panel(f, rule, lo, hi);
    double fine = panel(f, rule, lo, mid) + panel(f, rule, mid, hi);
    return Segment{lo, hi, fine, std::fabs(whole - fine)};
}

}  // namespace

const GaussRule& gauss_rule(int order) {
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
    return it->second;
}

QuadResult adaptive_gauss(const std::function<double(double)>& f,
                          const std::vector<double>& bounds,
                          const QuadSpec& spec) {
    spec.validate();
    if (bounds.size() < 2)
        throw std::invalid_argument("adaptive_gauss: need at least two bounds");
    const GaussRule& rule = gauss_rule(spec.panel_order);

    std::priority_queue<Segment, std::vector<Segment>, WorseError> queue;
    int panels = 0;
    double value = 0.0, error = 0.0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        Segment s = evaluate(f, rule, bounds[i], bounds[i + 1]);
        panels += 3;
        value += s.value;
        error += s.error;
        queue.push(s);
    }

    auto target = [&]() { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(value)); };
    while (error > target() && panels + 6 <= spec.max_panels && !queue.empty()) {
        Segment worst = queue.top();
        if (worst.error <= 0.0) break;  // refinement exhausted by rounding
        double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) break;  // interval at ulp width
        queue.pop();
        value -= worst.value;
        error -= worst.error;
        Segment left = evaluate(f, rule, worst.lo, mid);
        Segment right = evaluate(f, rule, mid, worst.hi);
        panels += 6;
        value += left.value + right.value;
        error += left.error + right.error;
        queue.push(left);
        queue.push(right);
    }

    if (error > target()) {
        std::ostringstream msg;
        msg << "adaptive_gauss: panel budget exhausted (estimate " << value
            << ", error bound " << error << ")";
        throw accuracy_error(msg.str(), value, error);
    }
    return QuadResult{value, error, false, panels};
}

}  // namespace hardylab
