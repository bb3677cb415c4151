#include "hardylab.h"

#include <cctype>
#include <cmath>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hardylab/continuous.hpp"
#include "hardylab/discrete.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/rearrange.hpp"
#include "hardylab/rhi.hpp"
#include "hardylab/selftest.hpp"
#include "hardylab/sharpness.hpp"
#include "hardylab/weight.hpp"

struct hl_weight {
    hardylab::Weight w;
};

struct hl_sequence {
    hardylab::WeightedSeq s;
};

namespace {

thread_local std::string g_last_error;

hl_status fail(hl_status code, const char* what) {
    g_last_error = what ? what : "";
    return code;
}

// Runs fn, translating the library's exception taxonomy into status
// codes and stashing the message for hl_last_error.
template <typename Fn>
hl_status guarded(Fn&& fn) {
    try {
        fn();
        return HL_OK;
    } catch (const hardylab::parse_error& e) {
        return fail(HL_ERR_PARSE, e.what());
    } catch (const hardylab::precondition_error& e) {
        return fail(HL_ERR_PRECONDITION, e.what());
    } catch (const hardylab::accuracy_error& e) {
        return fail(HL_ERR_ACCURACY, e.what());
    } catch (const hardylab::solver_error& e) {
        return fail(HL_ERR_SOLVER, e.what());
    } catch (const std::domain_error& e) {
        return fail(HL_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(HL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(HL_ERR_NO_MEMORY, e.what());
    } catch (const std::exception& e) {
        return fail(HL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(HL_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hl_status need(bool ok, const char* what) {
    return ok ? HL_OK : fail(HL_ERR_INVALID_ARGUMENT, what);
}

std::vector<std::string> split_suites(const char* suites) {
    std::vector<std::string> out;
    if (!suites) return out;
    std::string text(suites);
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::size_t end = comma == std::string::npos ? text.size() : comma;
        std::size_t a = start, b = end;
        while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
        if (b > a) out.push_back(text.substr(a, b - a));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

extern "C" {

const char* hl_status_name(hl_status s) {
    switch (s) {
        case HL_OK: return "ok";
        case HL_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case HL_ERR_PARSE: return "parse_error";
        case HL_ERR_DOMAIN: return "domain_error";
        case HL_ERR_PRECONDITION: return "precondition_error";
        case HL_ERR_ACCURACY: return "accuracy_error";
        case HL_ERR_SOLVER: return "solver_error";
        case HL_ERR_NO_MEMORY: return "no_memory";
        case HL_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* hl_last_error(void) { return g_last_error.c_str(); }

void hl_string_free(char* s) { delete[] s; }

hl_status hl_weight_from_json(const char* json_text, hl_weight** out) {
    if (hl_status s = need(json_text && out, "null argument")) return s;
    return guarded([&] {
        *out = new hl_weight{hardylab::weight_from_json(json_text)};
    });
}

hl_status hl_weight_step(const double* values, size_t n_values,
                         const double* breakpoints, size_t n_breaks,
                         hl_weight** out) {
    if (hl_status s = need(values && out && (breakpoints || n_breaks == 0),
                           "null argument"))
        return s;
    return guarded([&] {
        std::vector<double> v(values, values + n_values);
        std::vector<double> b(breakpoints, breakpoints + n_breaks);
        *out = new hl_weight{hardylab::Weight::step(v, b)};
    });
}

hl_status hl_weight_power(double coeff, double a, hl_weight** out) {
    if (hl_status s = need(out != nullptr, "null argument")) return s;
    return guarded([&] { *out = new hl_weight{hardylab::Weight::power(coeff, a)}; });
}

hl_status hl_weight_to_json(const hl_weight* w, char** out_json) {
    if (hl_status s = need(w && out_json, "null argument")) return s;
    return guarded([&] { *out_json = dup_string(hardylab::weight_to_json(w->w)); });
}

void hl_weight_free(hl_weight* w) { delete w; }

hl_status hl_weight_eval(const hl_weight* w, double t, double* out) {
    if (hl_status s = need(w && out, "null argument")) return s;
    return guarded([&] { *out = w->w.eval(t); });
}

hl_status hl_weight_prefix_integral(const hl_weight* w, double t, double r,
                                    double* out) {
    if (hl_status s = need(w && out, "null argument")) return s;
    return guarded([&] { *out = w->w.prefix_integral(t, r); });
}

hl_status hl_weight_hardy_average(const hl_weight* w, double t, double* out) {
    if (hl_status s = need(w && out, "null argument")) return s;
    return guarded([&] { *out = w->w.hardy_average(t); });
}

hl_status hl_weight_is_nonincreasing(const hl_weight* w, int* out) {
    if (hl_status s = need(w && out, "null argument")) return s;
    *out = w->w.is_nonincreasing() ? 1 : 0;
    return HL_OK;
}

hl_status hl_weight_is_step(const hl_weight* w, int* out) {
    if (hl_status s = need(w && out, "null argument")) return s;
    *out = w->w.is_step() ? 1 : 0;
    return HL_OK;
}

hl_status hl_sequence_from_csv(const char* csv_text, hl_sequence** out) {
    if (hl_status s = need(csv_text && out, "null argument")) return s;
    return guarded([&] {
        *out = new hl_sequence{hardylab::seq_from_csv(csv_text)};
    });
}

void hl_sequence_free(hl_sequence* s) { delete s; }

hl_status hl_rhi_constant(const hl_weight* w, double q, const char* family,
                          int grid, double* out_c, double* out_resolution) {
    if (hl_status s = need(w && family && out_c, "null argument")) return s;
    return guarded([&] {
        hardylab::RhiSearch search = hardylab::rhi_constant_search(
            w->w, q, hardylab::family_from_string(family), grid);
        *out_c = search.c;
        if (out_resolution) *out_resolution = search.uncertainty;
    });
}

hl_status hl_p0_solve(double q, double c, double* out_p0) {
    if (hl_status s = need(out_p0 != nullptr, "null argument")) return s;
    return guarded([&] { *out_p0 = hardylab::p0_solve(q, c); });
}

hl_status hl_k_p(double p, double q, double c, double* out) {
    if (hl_status s = need(out != nullptr, "null argument")) return s;
    return guarded([&] { *out = hardylab::k_p(p, q, c); });
}

hl_status hl_c_prime(double p, double q, double c, double* out) {
    if (hl_status s = need(out != nullptr, "null argument")) return s;
    return guarded([&] { *out = hardylab::c_prime(p, q, c); });
}

hl_status hl_cmd_analyze(const hl_weight* w, double q, const char* family,
                         int grid, int p_grid, char** out_json, int* out_pass) {
    if (hl_status s = need(w && family && out_json && out_pass, "null argument"))
        return s;
    return guarded([&] {
        hardylab::RhiRange range = hardylab::analyze_weight(
            w->w, q, hardylab::family_from_string(family), grid, p_grid);
        *out_json = dup_string(range.to_json().dump());
        *out_pass = range.all_verified() ? 1 : 0;
    });
}

hl_status hl_cmd_verify_theorem1(const hl_weight* w, double p, double q,
                                 char** out_json, int* out_pass) {
    if (hl_status s = need(w && out_json && out_pass, "null argument")) return s;
    return guarded([&] {
        hardylab::IneqReport rep = hardylab::theorem1_sides(
            w->w, hardylab::TheoremParams{p, q, w->w.total_integral()});
        *out_json = dup_string(rep.to_json_string());
        *out_pass = rep.status == hardylab::CheckStatus::pass ? 1 : 0;
    });
}

hl_status hl_cmd_verify_corollary1(const hl_weight* w, double p,
                                   char** out_json, int* out_pass) {
    if (hl_status s = need(w && out_json && out_pass, "null argument")) return s;
    return guarded([&] {
        hardylab::IneqReport rep = hardylab::corollary1_sides(w->w, p);
        *out_json = dup_string(rep.to_json_string());
        *out_pass = rep.status == hardylab::CheckStatus::pass ? 1 : 0;
    });
}

hl_status hl_cmd_verify_lemma1(const hl_weight* w, double p, double delta,
                               char** out_json, int* out_pass) {
    if (hl_status s = need(w && out_json && out_pass, "null argument")) return s;
    return guarded([&] {
        hardylab::IneqReport rep = hardylab::lemma1_report(w->w, p, delta);
        *out_json = dup_string(rep.to_json_string());
        *out_pass = rep.status == hardylab::CheckStatus::pass ? 1 : 0;
    });
}

hl_status hl_cmd_verify_interpolation(const hl_weight* w, double p, double q,
                                      char** out_json, int* out_pass) {
    if (hl_status s = need(w && out_json && out_pass, "null argument")) return s;
    return guarded([&] {
        hardylab::IneqReport rep = hardylab::interpolation_report(w->w, p, q);
        *out_json = dup_string(rep.to_json_string());
        *out_pass = rep.status == hardylab::CheckStatus::pass ? 1 : 0;
    });
}

hl_status hl_cmd_verify_theorem2(const hl_sequence* s, double p, double tol,
                                 char** out_json, int* out_pass) {
    if (hl_status st = need(s && out_json && out_pass, "null argument"))
        return st;
    return guarded([&] {
        if (!(tol > 0.0))
            throw std::invalid_argument("theorem2: need tol > 0");
        hardylab::IneqReport rep = hardylab::theorem2_sides(s->s, p, tol);
        *out_json = dup_string(rep.to_json_string());
        *out_pass = rep.status == hardylab::CheckStatus::pass ? 1 : 0;
    });
}

hl_status hl_cmd_extremal_scan(double p, double q, double f, int k_min,
                               int k_max, char** out_csv, int* out_pass) {
    if (hl_status s = need(out_csv && out_pass, "null argument")) return s;
    return guarded([&] {
        if (k_min > k_max)
            throw std::invalid_argument("extremal scan: need k_min <= k_max");
        std::vector<int> ks;
        for (int k = k_min; k <= k_max; ++k) ks.push_back(k);
        hardylab::ScanResult scan = hardylab::limit_scan(p, q, f, ks);
        *out_csv = dup_string(hardylab::scan_to_csv(scan));
        int pass = 1;
        for (std::size_t i = 1; i < scan.rows.size(); ++i) {
            double prev = scan.rows[i - 1].margin;
            if (scan.rows[i].margin >
                prev + 1e-12 * std::max(1.0, std::fabs(prev)))
                pass = 0;
        }
        *out_pass = pass;
    });
}

hl_status hl_cmd_rearrange(const hl_weight* w, double q, int grid,
                           char** out_json, int* out_pass) {
    if (hl_status s = need(w && out_json && out_pass, "null argument")) return s;
    return guarded([&] {
        hardylab::RearrangeReport rep = hardylab::theoremC_check(w->w, q, grid);
        *out_json = dup_string(rep.to_json().dump());
        *out_pass = rep.pass ? 1 : 0;
    });
}

hl_status hl_cmd_selftest(uint64_t seed, const char* suites, char** out_json,
                          int* out_pass) {
    if (hl_status s = need(out_json && out_pass, "null argument")) return s;
    return guarded([&] {
        std::vector<hardylab::CheckResult> checks =
            hardylab::run_checks(seed, split_suites(suites));
        *out_json = dup_string(hardylab::selftest_report(checks, seed).dump());
        *out_pass = hardylab::all_pass(checks) ? 1 : 0;
    });
}

}  // extern "C"
