/* C interface to the hardylab core: opaque handles, integer status
 * codes, and report strings the caller frees with hl_string_free.
 * Divergent integrals are values (+inf) and verdicts, never errors. */
#ifndef HARDYLAB_H
#define HARDYLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hl_status {
    HL_OK = 0,
    HL_ERR_INVALID_ARGUMENT = 1, /* bad parameter or invariant violation */
    HL_ERR_PARSE = 2,            /* malformed JSON/CSV input */
    HL_ERR_DOMAIN = 3,           /* argument outside the math domain */
    HL_ERR_PRECONDITION = 4,     /* data violates an operation premise */
    HL_ERR_ACCURACY = 5,         /* quadrature could not reach tolerance */
    HL_ERR_SOLVER = 6,           /* root solve failed consistency checks */
    HL_ERR_NO_MEMORY = 7,
    HL_ERR_INTERNAL = 8
} hl_status;

const char* hl_status_name(hl_status s);

/* Message for the most recent failure on this thread. */
const char* hl_last_error(void);

void hl_string_free(char* s);

/* ---- weights -------------------------------------------------- */

typedef struct hl_weight hl_weight;

/* {"pieces":[{"lo":0.0,"hi":0.5,"coeff":2.0,"exp":0.0},...]} */
hl_status hl_weight_from_json(const char* json_text, hl_weight** out);
hl_status hl_weight_step(const double* values, size_t n_values,
                         const double* breakpoints, size_t n_breaks,
                         hl_weight** out);
hl_status hl_weight_power(double coeff, double a, hl_weight** out);
hl_status hl_weight_to_json(const hl_weight* w, char** out_json);
void hl_weight_free(hl_weight* w);

hl_status hl_weight_eval(const hl_weight* w, double t, double* out);
/* +inf when w^r is not integrable at 0. */
hl_status hl_weight_prefix_integral(const hl_weight* w, double t, double r,
                                    double* out);
hl_status hl_weight_hardy_average(const hl_weight* w, double t, double* out);
hl_status hl_weight_is_nonincreasing(const hl_weight* w, int* out);
hl_status hl_weight_is_step(const hl_weight* w, int* out);

/* ---- sequences ------------------------------------------------- */

typedef struct hl_sequence hl_sequence;

/* CSV with header "lambda,a". */
hl_status hl_sequence_from_csv(const char* csv_text, hl_sequence** out);
void hl_sequence_free(hl_sequence* s);

/* ---- scalar pipeline ops --------------------------------------- */

/* family is "prefix", "suffix" or "all"; grid >= 64.  *out_c is +inf
 * (with HL_OK) when the ratio diverges near 0. */
hl_status hl_rhi_constant(const hl_weight* w, double q, const char* family,
                          int grid, double* out_c, double* out_resolution);
hl_status hl_p0_solve(double q, double c, double* out_p0);
hl_status hl_k_p(double p, double q, double c, double* out);
hl_status hl_c_prime(double p, double q, double c, double* out);

/* ---- report commands ------------------------------------------- */
/* Each returns HL_OK with *out_text set even when the checked property
 * fails; *out_pass is 1 only when every check passed (divergent
 * verdicts count as not passed). */

hl_status hl_cmd_analyze(const hl_weight* w, double q, const char* family,
                         int grid, int p_grid, char** out_json, int* out_pass);

hl_status hl_cmd_verify_theorem1(const hl_weight* w, double p, double q,
                                 char** out_json, int* out_pass);
hl_status hl_cmd_verify_corollary1(const hl_weight* w, double p,
                                   char** out_json, int* out_pass);
hl_status hl_cmd_verify_lemma1(const hl_weight* w, double p, double delta,
                               char** out_json, int* out_pass);
hl_status hl_cmd_verify_interpolation(const hl_weight* w, double p, double q,
                                      char** out_json, int* out_pass);
hl_status hl_cmd_verify_theorem2(const hl_sequence* s, double p, double tol,
                                 char** out_json, int* out_pass);

/* CSV "k,a,L,margin" for a_k = 1/p - 10^(-k), k_min <= k <= k_max. */
hl_status hl_cmd_extremal_scan(double p, double q, double f, int k_min,
                               int k_max, char** out_csv, int* out_pass);

hl_status hl_cmd_rearrange(const hl_weight* w, double q, int grid,
                           char** out_json, int* out_pass);

/* suites is a comma-separated subset of
 * "weight,discrete,continuous,sharpness,rhi,rearrange" or NULL/"" for
 * all.  Identical seeds produce byte-identical reports. */
hl_status hl_cmd_selftest(uint64_t seed, const char* suites, char** out_json,
                          int* out_pass);

#ifdef __cplusplus
}
#endif

#endif /* HARDYLAB_H */
