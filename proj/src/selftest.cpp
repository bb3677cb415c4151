#include "hardylab/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "hardylab/continuous.hpp"
#include "hardylab/corpus.hpp"
#include "hardylab/discrete.hpp"
#include "hardylab/oracle.hpp"
#include "hardylab/rearrange.hpp"
#include "hardylab/report.hpp"
#include "hardylab/rhi.hpp"
#include "hardylab/sharpness.hpp"
#include "hardylab/weight.hpp"

namespace hardylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLn2 = std::log(2.0);

// Accumulates one named check.  slack() passes at >= 0, strict() only
// at > 0; worst keeps the minimum slack seen (NaN counts as a failure
// and poisons worst so it cannot go unnoticed).
class Check {
public:
    Check(const char* suite, const char* name) {
        result_.suite = suite;
        result_.name = name;
    }

    void slack(double s) {
        ++result_.cases;
        if (std::isnan(s)) {
            ++result_.failures;
            result_.worst = s;
            seen_ = true;
            return;
        }
        if (s < 0.0) ++result_.failures;
        if (!seen_ || s < result_.worst) {
            result_.worst = s;
            seen_ = true;
        }
    }

    void strict(double s) {
        if (s == 0.0) s = -0.0 - std::numeric_limits<double>::denorm_min();
        slack(s);
    }

    void must(bool ok) { slack(ok ? 1.0 : -1.0); }

    void note(const std::string& text) { result_.note = text; }

    CheckResult done() {
        if (!seen_) result_.worst = 0.0;
        return result_;
    }

private:
    CheckResult result_;
    bool seen_ = false;
};

// Random non-increasing weight normalized to total integral 1, with the
// first-piece exponent kept below 1/(p+1) so every moment the checks
// need stays integrable.
Weight continuous_corpus_weight(Rng& rng, double p) {
    Weight w = random_power_weight(rng, 6, 0.9 / (p + 1.0), true);
    return w.scaled(1.0 / w.total_integral());
}

void weight_suite(std::uint64_t seed, std::vector<CheckResult>* out) {
    Check oracle("weight", "prefix_oracle");
    Check monotone("weight", "prefix_monotone");
    for (int i = 0; i < 1000; ++i) {
        Rng rng(derive_seed(seed, 0x1000 + i));
        Weight w = random_power_weight(rng, 5, 0.3, false);
        double t = rng.uniform_pos(0.05, 1.0);
        double r = rng.uniform(0.2, 3.0);
        double closed = w.prefix_integral(t, r);
        double numeric = oracle_power_integral(w, 0.0, t, r);
        oracle.slack(1e-10 - std::fabs(closed - numeric) / closed);
        double t2 = rng.uniform(t, 1.0);
        monotone.slack(w.prefix_integral(std::max(t2, t), r) - closed +
                       1e-12 * std::max(1.0, closed));
    }
    out->push_back(oracle.done());
    out->push_back(monotone.done());

    Check dominates("weight", "average_dominates");
    for (int i = 0; i < 100; ++i) {
        Rng rng(derive_seed(seed, 0x2000 + i));
        Weight w = random_power_weight(rng, 4, 0.5, true);
        for (int j = 0; j < 20; ++j) {
            double t = rng.uniform_pos(0.0, 1.0);
            double ev = w.eval(t);
            dominates.slack(w.hardy_average(t) - ev +
                            1e-12 * std::max(1.0, ev));
        }
    }
    out->push_back(dominates.done());

    Check scaling("weight", "scaling");
    for (int i = 0; i < 500; ++i) {
        Rng rng(derive_seed(seed, 0x3000 + i));
        Weight w = random_power_weight(rng, 5, 0.3, false);
        double k = rng.uniform_pos(0.1, 8.0);
        double t = rng.uniform_pos(0.05, 1.0);
        double r = rng.uniform(0.2, 3.0);
        double lhs = w.scaled(k).prefix_integral(t, r);
        double rhs = std::pow(k, r) * w.prefix_integral(t, r);
        scaling.slack(1e-12 - std::fabs(lhs - rhs) / rhs);
    }
    out->push_back(scaling.done());

    Check divergence("weight", "divergence_rule");
    divergence.must(std::isinf(Weight::power(1.0, 0.6).range_integral(0.0, 1.0, 2.0)));
    divergence.must(std::isinf(Weight::power(1.0, 0.5).range_integral(0.0, 1.0, 2.0)));
    divergence.must(std::isfinite(Weight::power(1.0, 0.6).range_integral(0.1, 1.0, 2.0)));
    divergence.must(std::isfinite(Weight::power(1.0, 0.6).range_integral(0.0, 1.0, 1.0)));
    out->push_back(divergence.done());
}

void discrete_suite(std::uint64_t seed, std::vector<CheckResult>* out) {
    Check elem("discrete", "elementary_inequality");
    Check elem_eq("discrete", "elementary_equality");
    {
        Rng rng(derive_seed(seed, 0x1));
        for (int i = 0; i < 100000; ++i) {
            double x = rng.uniform(0.0, 100.0);
            double y = rng.uniform(0.0, 100.0);
            double p = rng.uniform(1.01, 10.0);
            double scale = std::max({1.0, (p - 1.0) * std::pow(x, p) + std::pow(y, p),
                                     p * std::pow(x, p - 1.0) * y});
            elem.slack(elementary_gap(x, y, p) + 1e-9 * scale);
        }
        for (int i = 0; i < 10000; ++i) {
            double x = rng.uniform(0.0, 100.0);
            double p = rng.uniform(1.01, 10.0);
            double scale = std::max(1.0, p * std::pow(x, p));
            elem_eq.slack(1e-12 * scale - std::fabs(elementary_gap(x, x, p)));
        }
    }
    out->push_back(elem.done());
    out->push_back(elem_eq.done());

    const double kPGrid[] = {1.1, 1.5, 2.0, 3.0, 7.5};
    Check margins("discrete", "theorem2_margins");
    for (int i = 0; i < 10000; ++i) {
        Rng rng(derive_seed(seed, 0x10000 + i));
        WeightedSeq s = random_sequence(rng, 64);
        for (double p : kPGrid) {
            IneqReport rep = theorem2_sides(s, p);
            margins.slack(rep.margin + rep.budget);
        }
    }
    out->push_back(margins.done());

    Check equality("discrete", "theorem2_equality");
    for (int i = 0; i < 1000; ++i) {
        Rng rng(derive_seed(seed, 0x30000 + i));
        int n = rng.uniform_int(1, 64);
        double value = rng.uniform(0.0, 10.0);
        std::vector<double> lambda(n), a(n, value);
        for (double& l : lambda) l = rng.uniform_pos(0.0, 10.0);
        IneqReport constant = theorem2_sides(WeightedSeq(lambda, a),
                                             kPGrid[i % 5]);
        equality.slack(1e-12 * std::max(1.0, std::fabs(constant.lhs)) -
                       std::fabs(constant.margin));
        double l1 = rng.uniform_pos(0.0, 10.0);
        double a1 = rng.uniform(0.0, 10.0);
        IneqReport single =
            theorem2_sides(WeightedSeq({l1}, {a1}), kPGrid[(i + 2) % 5]);
        equality.slack(1e-12 * std::max(1.0, std::fabs(single.lhs)) -
                       std::fabs(single.margin));
    }
    out->push_back(equality.done());

    Check per_term("discrete", "delta_per_term");
    Check telescoping("discrete", "delta_telescoping");
    Check reconciles("discrete", "delta_reconciles");
    for (int i = 0; i < 1000; ++i) {
        Rng rng(derive_seed(seed, 0x40000 + i));
        WeightedSeq s = random_sequence(rng, 64);
        for (double p : {1.5, 3.0}) {
            std::vector<DeltaBound> chain = delta_chain(s, p);
            double sum_bound = 0.0, comp_b = 0.0;
            double sum_diff = 0.0, comp_d = 0.0;
            for (const DeltaBound& db : chain) {
                per_term.slack(db.bound - db.delta +
                               1e-9 * std::max({1.0, std::fabs(db.delta),
                                                std::fabs(db.bound)}));
                double yb = db.bound - comp_b;
                double tb = sum_bound + yb;
                comp_b = (tb - sum_bound) - yb;
                sum_bound = tb;
                double yd = (db.delta - db.bound) - comp_d;
                double td = sum_diff + yd;
                comp_d = (td - sum_diff) - yd;
                sum_diff = td;
            }
            std::vector<RunningRatio> rr = running_ratios(s);
            double tail = rr.back().Lambda * std::pow(rr.back().ratio, p) /
                          (p - 1.0);
            telescoping.slack(1e-12 * std::max(1.0, tail) -
                              std::fabs(sum_bound + tail));
            IneqReport rep = theorem2_sides(s, p);
            reconciles.slack(1e-9 * std::max({1.0, std::fabs(rep.lhs),
                                              std::fabs(rep.rhs)}) -
                             std::fabs(sum_diff - (rep.lhs - rep.rhs)));
        }
    }
    out->push_back(per_term.done());
    out->push_back(telescoping.done());
    out->push_back(reconciles.done());

    Check special("discrete", "classical_specialization");
    Check copson("discrete", "copson_margins");
    for (int i = 0; i < 500; ++i) {
        Rng rng(derive_seed(seed, 0x50000 + i));
        WeightedSeq s = random_sequence(rng, 64);
        double p = kPGrid[i % 5];
        WeightedSeq unit(std::vector<double>(s.size(), 1.0), s.a);
        IneqReport weighted = theorem2_sides(unit, p);
        IneqReport cop_unit = copson_sides(unit, p);
        IneqReport classical = hardy_classical_sides(s.a, p);
        special.must(weighted.lhs == classical.lhs &&
                     cop_unit.lhs == classical.lhs &&
                     cop_unit.rhs == classical.rhs);
        copson.slack(classical.margin + classical.budget);
        IneqReport cop = copson_sides(s, p);
        copson.slack(cop.margin + cop.budget);
    }
    out->push_back(special.done());
    out->push_back(copson.done());
}

void continuous_suite(std::uint64_t seed, std::vector<CheckResult>* out) {
    std::vector<std::pair<Weight, double>> corpus;
    corpus.reserve(200);
    for (int i = 0; i < 200; ++i) {
        Rng rng(derive_seed(seed, 0x100 + i));
        double p = rng.uniform(1.1, 6.0);
        corpus.emplace_back(continuous_corpus_weight(rng, p), p);
    }

    Check identity("continuous", "lemma1_identity");
    for (const auto& [w, p] : corpus) {
        for (int j = 1; j <= 10; ++j) {
            ValueWithBudget r = lemma1_residual(w, p, j / 10.0);
            identity.slack(10.0 * r.budget - std::fabs(r.value));
        }
    }
    out->push_back(identity.done());

    Check closed("continuous", "lemma1_closed_form");
    {
        Weight w = Weight::power(1.0, 0.25);
        for (double delta : {0.5, 1.0}) {
            double expect = 32.0 / 9.0 * std::sqrt(delta);
            double got = integrate_product(w, 0.0, delta, 2.0, 0.0).value;
            closed.slack(1e-10 - std::fabs(got - expect) / expect);
            ValueWithBudget r = lemma1_residual(w, 2.0, delta);
            closed.slack(10.0 * r.budget - std::fabs(r.value));
        }
    }
    out->push_back(closed.done());

    Check margins("continuous", "theorem1_margins");
    Check strict("continuous", "theorem1_strict");
    Check q1("continuous", "theorem1_q1_equality");
    for (const auto& [w, p] : corpus) {
        double f = w.total_integral();
        std::vector<double> qs{1.0, p};
        if (p > 1.5) qs.push_back(1.5);
        for (double q : qs) {
            IneqReport rep = theorem1_sides(w, TheoremParams{p, q, f});
            margins.slack(rep.margin + rep.budget);
            if (q > 1.0)
                strict.strict(rep.margin - rep.budget);
            else
                q1.slack(rep.budget - std::fabs(rep.margin));
        }
    }
    out->push_back(margins.done());
    out->push_back(strict.done());
    out->push_back(q1.done());

    Check pinned("continuous", "theorem1_closed_form");
    {
        Weight w = Weight::power(1.0, 0.25);
        IneqReport rep =
            theorem1_sides(w, TheoremParams{2.0, 2.0, w.total_integral()});
        pinned.slack(1e-10 - std::fabs(rep.lhs - 32.0 / 9.0) / (32.0 / 9.0));
        pinned.slack(1e-10 - std::fabs(rep.rhs - 40.0 / 9.0) / (40.0 / 9.0));
        pinned.must(rep.status == CheckStatus::pass);
    }
    out->push_back(pinned.done());

    Check chain("continuous", "corollary_chain");
    for (int i = 0; i < 50; ++i) {
        const auto& [w, p] = corpus[static_cast<std::size_t>(i) * 4];
        IneqReport c1 = corollary1_sides(w, p);
        IneqReport t1 = theorem1_sides(w, TheoremParams{p, 1.0, w.total_integral()});
        chain.must(c1.lhs == t1.lhs && c1.rhs == t1.rhs);
    }
    out->push_back(chain.done());

    Check gap("continuous", "interpolation_gap");
    for (const auto& [w, p] : corpus) {
        std::vector<double> qs{p};
        if (p > 1.5) qs.push_back(1.5);
        for (double q : qs) {
            ValueWithBudget r = holder_interpolation_gap(w, p, q);
            gap.slack(r.value + r.budget);
        }
    }
    out->push_back(gap.done());

    Check single("continuous", "interpolation_single_piece");
    for (int i = 0; i < 100; ++i) {
        Rng rng(derive_seed(seed, 0x200 + i));
        double p = rng.uniform(1.1, 6.0);
        double q = rng.uniform(1.01, p);
        double coeff = rng.uniform_pos(0.0, 10.0);
        double a = rng.uniform(0.0, 0.9 / (p + 1.0));
        Weight w = Weight::power(coeff, a);
        ValueWithBudget r = holder_interpolation_gap(w, p, q);
        single.slack(r.budget - std::fabs(r.value));
    }
    out->push_back(single.done());

    Check gmono("continuous", "g_monotonicity");
    Check glimit("continuous", "g_limit");
    for (int i = 0; i < 10000; ++i) {
        Rng rng(derive_seed(seed, 0x300 + i));
        double q = rng.uniform(1.01, 5.0);
        double p = rng.uniform(1.1, 6.0);
        double f = rng.uniform(0.5, 2.0);
        double x1 = rng.uniform_pos(0.0, 100.0);
        double x2 = x1 * rng.uniform(1.1, 10.0);
        double g1 = g_eval(x1, q, p, f);
        double g2 = g_eval(x2, q, p, f);
        gmono.strict(g2 - g1);
        glimit.strict(-q * std::pow(f, p) / (p - 1.0) - g2);
    }
    out->push_back(gmono.done());
    out->push_back(glimit.done());

    Check fpos("continuous", "f_positivity");
    {
        Rng rng(derive_seed(seed, 0x400));
        for (int i = 0; i < 10000; ++i) {
            double q = rng.uniform(1.01, 5.0);
            fpos.strict(f_eval(1.0 + rng.uniform_pos(0.0, 99.0), q));
            fpos.slack(4e-16 * q - std::fabs(f_eval(1.0, q)));
        }
    }
    out->push_back(fpos.done());
}

void sharpness_suite(std::uint64_t seed, std::vector<CheckResult>* out) {
    Check ratio("sharpness", "ratio_sharpness");
    {
        double prev = 0.0;
        for (int k = 1; k <= 4; ++k) {
            double r = ratio_J(1.0 / 3.0 - std::pow(10.0, -k), 3.0, 2.0);
            if (k > 1) ratio.strict(r - prev);
            ratio.strict(2.25 - r);
            prev = r;
        }
        ratio.slack(1e-2 - (2.25 - prev) / 2.25);
    }
    out->push_back(ratio.done());

    Check scan("sharpness", "limit_scan_sharpness");
    {
        const double pq[][2] = {{3.0, 2.0}, {2.0, 2.0}, {5.0, 1.5}};
        for (const auto& pair : pq) {
            ScanResult s = limit_scan(pair[0], pair[1], 1.0, {1, 2, 3, 4});
            scan.must(s.rows.size() == 4 && s.skipped.empty());
            for (std::size_t i = 0; i < s.rows.size(); ++i) {
                scan.strict(s.rows[i].margin);
                if (i > 0) scan.strict(s.rows[i - 1].margin - s.rows[i].margin);
            }
            scan.slack(1e-2 - s.rows[3].margin / s.rows[0].margin);
        }
    }
    out->push_back(scan.done());

    Check q1("sharpness", "limit_scan_q1");
    for (double p : {2.0, 3.0, 5.0}) {
        for (double f : {1.0, 2.0}) {
            ScanResult s = limit_scan(p, 1.0, f, {1, 2, 3, 4});
            for (const ScanRow& row : s.rows)
                q1.slack(1e-10 * std::max(1.0, std::pow(f, p) / (p - 1.0)) -
                         std::fabs(row.margin));
        }
    }
    out->push_back(q1.done());

    Check lq("sharpness", "lq_oracle");
    Check rj("sharpness", "ratio_oracle");
    for (int i = 0; i < 500; ++i) {
        Rng rng(derive_seed(seed, 0x500 + i));
        double p = rng.uniform(1.5, 5.0);
        double q = rng.uniform(1.01, p);
        double a = rng.uniform(0.02, 1.0 / p - 0.02);
        double f = rng.uniform(0.5, 2.0);
        Weight w = extremal_weight(f, a);
        double i0 = oracle_product_integral(w, 0.0, 1.0, p, 0.0);
        double iq = oracle_product_integral(w, 0.0, 1.0, p - q, q);
        double kq = std::pow(p / (p - 1.0), q);
        double budget = 1e-9 * std::max({1.0, i0, kq * iq});
        lq.slack(budget - std::fabs(lq_closed(a, p, q, f) - (i0 - kq * iq)));
        double r = ratio_J(a, p, q);
        rj.slack(1e-9 * std::max(1.0, r) - std::fabs(r - i0 / iq));
    }
    out->push_back(lq.done());
    out->push_back(rj.done());
}

void rhi_suite(std::uint64_t seed, std::vector<CheckResult>* out) {
    Check pinned("rhi", "p0_pinned");
    pinned.slack(1e-10 - std::fabs(p0_solve(2.0, 9.0 / 8.0) - 4.0));
    pinned.must(std::isinf(p0_solve(1.5, 1.0)));
    pinned.must(std::isinf(p0_solve(2.0, 1.0)));
    pinned.must(std::isinf(p0_solve(7.0, 1.0)));
    {
        double p0 = p0_solve(2.0, 10.0 / 9.0);
        pinned.must(p0 > 4.0 && p0 < 4.2);
        double c = std::pow(0.6, 1.5) / 0.4;
        pinned.slack(1e-8 * 2.5 - std::fabs(p0_solve(1.5, c) - 2.5));
    }
    out->push_back(pinned.done());

    Check roundtrip("rhi", "p0_roundtrip");
    for (int i = 0; i < 1000; ++i) {
        Rng rng(derive_seed(seed, 0x600 + i));
        double q = rng.uniform(1.05, 10.0);
        double a = rng.uniform(0.05, 0.95) / q;
        double c = std::pow(1.0 - a, q) / (1.0 - a * q);
        roundtrip.slack(1e-8 / a - std::fabs(p0_solve(q, c) - 1.0 / a));
    }
    out->push_back(roundtrip.done());

    Check constants("rhi", "constants_pinned");
    constants.slack(1e-12 - std::fabs(k_p(3.0, 2.0, 1.125) - 5.0 / 32.0));
    constants.slack(1e-12 - std::fabs(c_prime(3.0, 2.0, 1.125) - 4.8));
    out->push_back(constants.done());

    Check fixed("rhi", "c_prime_fixed_point");
    for (int i = 0; i < 200; ++i) {
        Rng rng(derive_seed(seed, 0x700 + i));
        double q = rng.uniform(1.05, 8.0);
        double c = rng.uniform(1.0, 50.0);
        fixed.must(c_prime(q, q, c) == c);
    }
    out->push_back(fixed.done());

    Check positivity("rhi", "k_p_positivity");
    for (int i = 0; i < 20; ++i) {
        Rng rng(derive_seed(seed, 0x800 + i));
        double q = rng.uniform(1.05, 5.0);
        double a = rng.uniform(0.1, 0.9) / q;
        double c = std::pow(1.0 - a, q) / (1.0 - a * q);
        double p0 = p0_solve(q, c);
        for (int j = 0; j < 256; ++j)
            positivity.strict(k_p(q + (p0 - q) * j / 256.0, q, c));
    }
    out->push_back(positivity.done());

    Check jensen("rhi", "jensen_floor");
    Check jconst("rhi", "jensen_constant");
    {
        const IntervalFamily families[] = {IntervalFamily::prefix,
                                           IntervalFamily::suffix,
                                           IntervalFamily::all};
        for (int i = 0; i < 60; ++i) {
            Rng rng(derive_seed(seed, 0x900 + i));
            double q = rng.uniform(1.1, 5.0);
            Weight w = i % 2 == 0 ? random_step_weight(rng, 6, false)
                                  : random_power_weight(rng, 4, 0.9 / q, false);
            double c = rhi_constant(w, q, families[i % 3], 64);
            jensen.slack(c - (1.0 - 1e-12));
        }
        for (int i = 0; i < 6; ++i) {
            Rng rng(derive_seed(seed, 0xA00 + i));
            double value = rng.uniform_pos(0.0, 10.0);
            double q = rng.uniform(1.1, 5.0);
            double c = rhi_constant(Weight::constant(value), q,
                                    families[i % 3], 64);
            jconst.slack(1e-6 - std::fabs(c - 1.0));
        }
    }
    out->push_back(jensen.done());
    out->push_back(jconst.done());

    Check phi("rhi", "phi_monotonicity");
    {
        Rng rng(derive_seed(seed, 0xB00));
        for (int i = 0; i < 100000; ++i) {
            double q = rng.uniform(1.01, 5.0);
            double p = q * rng.uniform(1.01, 4.0);
            double y = rng.uniform_pos(0.0, 10.0);
            double x = y * rng.uniform(1.0, 5.0);
            double z = x * rng.uniform(1.0, 5.0);
            double fx = phi_y(x, y, p, q);
            double fz = phi_y(z, y, p, q);
            phi.slack(fx - fz + 1e-9 * std::max({1.0, std::fabs(fx), std::fabs(fz)}));
        }
    }
    out->push_back(phi.done());

    Check peq("rhi", "theorem3_p_eq_q");
    {
        peq.must(theorem3_verify(Weight::step({2.0, 1.0}, {0.5}), 2.0, 2.0, {}, 64)
                     .status == CheckStatus::pass);
        for (int i = 0; i < 20; ++i) {
            Rng rng(derive_seed(seed, 0xC00 + i));
            Weight w = random_step_weight(rng, 5, true);
            double q = i % 2 == 0 ? 1.5 : 2.0;
            peq.must(theorem3_verify(w, q, q, {}, 64).status == CheckStatus::pass);
        }
    }
    out->push_back(peq.done());

    Check two_step("rhi", "theorem3_two_step");
    {
        Weight w = Weight::step({2.0, 1.0}, {0.5});
        RhiRange range = analyze_weight(w, 2.0, IntervalFamily::prefix, 256, 16);
        two_step.slack(1e-9 - std::fabs(range.c - 10.0 / 9.0));
        two_step.must(range.p0 > 4.0 && range.p0 < 4.2);
        two_step.must(range.table.size() == 16);
        for (const RhiRangeRow& row : range.table) {
            two_step.must(row.verified);
            two_step.strict(row.k_p);
        }
        two_step.must(range.table.front().c_prime == range.c);
        two_step.must(range.all_verified());
    }
    out->push_back(two_step.done());

    Check power("rhi", "theorem3_power");
    {
        IneqReport rep = theorem3_verify(Weight::power(1.0, 0.25), 2.0, 3.0);
        power.must(rep.status == CheckStatus::pass);
        power.slack(1e-9 - std::fabs(rep.params.at("c") - 9.0 / 8.0));
        power.slack(1e-6 - std::fabs(rep.params.at("c_prime") - 4.8));
        IneqReport flat = theorem3_verify(Weight::constant(3.0), 2.0, 4.0);
        power.must(flat.status == CheckStatus::pass);
    }
    out->push_back(power.done());

    Check extremal("rhi", "extremal_divergence");
    for (double c : {1.125, 10.0 / 9.0}) {
        ExtremalRhi ex = extremal_rhi(2.0, c);
        extremal.must(ex.p0 > 3.9 && ex.p0 < 4.2);
        extremal.slack(1e-10 - ex.cert_residual);
        extremal.must(ex.truncated.size() == 41);
        for (std::size_t i = 1; i < ex.truncated.size(); ++i) {
            double step = ex.truncated[i].second - ex.truncated[i - 1].second;
            extremal.slack(1e-12 - std::fabs(step - kLn2));
        }
    }
    {
        ExtremalRhi ex = extremal_rhi(2.0, 1.125);
        extremal.slack(1e-10 - std::fabs(ex.p0 - 4.0));
        extremal.slack(1e-10 - std::fabs(ex.a - 0.25));
    }
    out->push_back(extremal.done());
}

void rearrange_suite(std::uint64_t seed, std::vector<CheckResult>* out) {
    Check idem("rearrange", "rearrange_idempotent");
    Check mass("rearrange", "rearrange_mass");
    for (int i = 0; i < 200; ++i) {
        Rng rng(derive_seed(seed, 0xD00 + i));
        Weight w = random_step_weight(rng, 8, false);
        Weight w1 = rearrange_nonincreasing(w);
        Weight w2 = rearrange_nonincreasing(w1);
        bool same = w1.pieces().size() == w2.pieces().size();
        for (std::size_t j = 0; same && j < w1.pieces().size(); ++j) {
            const PowerPiece& a = w1.pieces()[j];
            const PowerPiece& b = w2.pieces()[j];
            same = a.lo == b.lo && a.hi == b.hi && a.coeff == b.coeff &&
                   a.exponent == b.exponent;
        }
        idem.must(same);
        idem.must(w1.is_nonincreasing());
        for (double r : {1.0, 2.0, 3.7}) {
            double before = w.prefix_integral(1.0, r);
            double after = w1.prefix_integral(1.0, r);
            mass.slack(1e-12 * std::max(1.0, before) - std::fabs(before - after));
        }
    }
    out->push_back(idem.done());
    out->push_back(mass.done());

    const double kQ[] = {1.5, 2.0, 3.0};
    Check theoremC("rearrange", "theoremC_suite");
    for (int i = 0; i < 500; ++i) {
        Rng rng(derive_seed(seed, 0xE00 + i));
        Weight w = random_step_weight(rng, 8, false);
        for (double q : kQ) {
            RearrangeReport rep = theoremC_check(w, q, 64);
            theoremC.slack(rep.c_before * (1.0 + 1e-6) + rep.resolution -
                           rep.c_after);
        }
    }
    out->push_back(theoremC.done());

    Check theoremD("rearrange", "theoremD_suite");
    for (int i = 0; i < 500; ++i) {
        Rng rng(derive_seed(seed, 0xF00 + i));
        Weight w = random_step_weight(rng, 8, true);
        EndpointFamilyReport rep = theoremD_check(w, kQ[i % 3], 64);
        theoremD.slack(rep.tolerance -
                       std::fabs(rep.c_all - std::max(rep.c_prefix, rep.c_suffix)));
    }
    out->push_back(theoremD.done());
}

}  // namespace

std::vector<CheckResult> run_checks(std::uint64_t seed,
                                    const std::vector<std::string>& suites) {
    static const std::set<std::string> known{"weight",    "discrete",
                                             "continuous", "sharpness",
                                             "rhi",       "rearrange"};
    std::set<std::string> wanted;
    for (const std::string& s : suites) {
        if (!known.count(s))
            throw std::invalid_argument("unknown selftest suite \"" + s + "\"");
        wanted.insert(s);
    }
    auto enabled = [&](const char* name) {
        return wanted.empty() || wanted.count(name) > 0;
    };

    std::vector<CheckResult> out;
    if (enabled("weight")) weight_suite(derive_seed(seed, 1), &out);
    if (enabled("discrete")) discrete_suite(derive_seed(seed, 2), &out);
    if (enabled("continuous")) continuous_suite(derive_seed(seed, 3), &out);
    if (enabled("sharpness")) sharpness_suite(derive_seed(seed, 4), &out);
    if (enabled("rhi")) rhi_suite(derive_seed(seed, 5), &out);
    if (enabled("rearrange")) rearrange_suite(derive_seed(seed, 6), &out);
    return out;
}

nlohmann::json selftest_report(const std::vector<CheckResult>& checks,
                               std::uint64_t seed) {
    nlohmann::json suites = nlohmann::json::object();
    for (const CheckResult& check : checks) {
        nlohmann::json& suite = suites[check.suite];
        if (suite.is_null()) {
            suite = {{"pass", true}, {"checks", nlohmann::json::array()}};
        }
        suite["checks"].push_back({{"name", check.name},
                                   {"cases", check.cases},
                                   {"failures", check.failures},
                                   {"worst", json_number(check.worst)},
                                   {"note", check.note}});
        if (!check.pass()) suite["pass"] = false;
    }
    return {{"seed", seed}, {"pass", all_pass(checks)}, {"suites", suites}};
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const CheckResult& check : checks)
        if (!check.pass()) return false;
    return true;
}

}  // namespace hardylab
