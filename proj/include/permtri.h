/*
 * permtri - verification toolkit for the permutation trinomial family
 *     f(x) = x + alpha x^{q(q-1)+1} + beta x^{2(q-1)+1}  over GF(q^2), q = 2^m.
 *
 * C interface of the shared library. All functions return a status code;
 * results come back through out-parameters. Handles are opaque and must be
 * released with their matching free function. A tower handle is immutable
 * after creation and may be shared between threads.
 *
 * Element encoding: an element of GF(2^m) is an unsigned integer below 2^m
 * whose bit j is the coefficient of t^j. An element of GF(q^2) is a pair
 * (a, b) meaning a + i*b in the basis {1, i}, i^2 = i + k.
 */

#ifndef PERMTRI_H
#define PERMTRI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum permtri_status {
    PERMTRI_OK = 0,
    PERMTRI_ERR_BAD_ARG = 1,
    PERMTRI_ERR_PARSE = 2,
    PERMTRI_ERR_REDUCIBLE_MODULUS = 3,
    PERMTRI_ERR_DEGREE_MISMATCH = 4,
    PERMTRI_ERR_BAD_TRACE = 5,
    PERMTRI_ERR_DIVISION_BY_ZERO = 6,
    PERMTRI_ERR_DEGENERATE_EQUATION = 7,
    PERMTRI_ERR_NOT_ON_MU = 8,
    PERMTRI_ERR_BAD_DIVISOR = 9,
    PERMTRI_ERR_ZERO_COEFFICIENT = 10,
    PERMTRI_ERR_RESOURCE_LIMIT = 11,
    PERMTRI_ERR_NON_TERMINATING = 12,
    PERMTRI_ERR_INEXACT_DIVISION = 13,
    PERMTRI_ERR_ZERO_DEGREE = 14,
    PERMTRI_ERR_IO = 15,
    PERMTRI_ERR_INCONSISTENT = 16,
    PERMTRI_ERR_INTERNAL = 17
} permtri_status;

/* Static description of a status code. */
const char* permtri_strerror(permtri_status status);

const char* permtri_version(void);

/* GF(q) / GF(q^2) tower context. */
typedef struct permtri_tower permtri_tower;

/*
 * Creates GF(2^m) and its quadratic extension. modulus_hex selects the
 * irreducible modulus ("0x13"); NULL picks the smallest-encoding irreducible
 * polynomial of degree m. k_hex selects the trace-1 tower constant; NULL
 * picks the smallest-encoding trace-1 element. 2 <= m <= 24.
 */
permtri_status permtri_tower_create(uint32_t m, const char* modulus_hex, const char* k_hex,
                                    permtri_tower** out);
void permtri_tower_free(permtri_tower* tower);

uint32_t permtri_tower_m(const permtri_tower* tower);
uint32_t permtri_tower_q(const permtri_tower* tower);
uint32_t permtri_tower_modulus(const permtri_tower* tower);
uint32_t permtri_tower_k(const permtri_tower* tower);

/* --- GF(q) arithmetic ---------------------------------------------------- */

permtri_status permtri_fq_add(const permtri_tower* t, uint32_t x, uint32_t y, uint32_t* out);
permtri_status permtri_fq_mul(const permtri_tower* t, uint32_t x, uint32_t y, uint32_t* out);
permtri_status permtri_fq_inv(const permtri_tower* t, uint32_t x, uint32_t* out);
permtri_status permtri_fq_pow(const permtri_tower* t, uint32_t x, uint64_t e, uint32_t* out);
permtri_status permtri_fq_sqrt(const permtri_tower* t, uint32_t x, uint32_t* out);
permtri_status permtri_fq_quartic_root(const permtri_tower* t, uint32_t x, uint32_t* out);
permtri_status permtri_fq_trace(const permtri_tower* t, uint32_t x, int* out);

/*
 * Roots of a*T^2 + b*T + c in GF(q). roots must have room for two entries;
 * *count receives 0, 1 or 2.
 */
permtri_status permtri_fq_solve_quadratic(const permtri_tower* t, uint32_t a, uint32_t b,
                                          uint32_t c, uint32_t roots[2], int* count);

/* --- GF(q^2) arithmetic --------------------------------------------------- */

permtri_status permtri_fq2_add(const permtri_tower* t, uint32_t xa, uint32_t xb, uint32_t ya,
                               uint32_t yb, uint32_t* oa, uint32_t* ob);
permtri_status permtri_fq2_mul(const permtri_tower* t, uint32_t xa, uint32_t xb, uint32_t ya,
                               uint32_t yb, uint32_t* oa, uint32_t* ob);
permtri_status permtri_fq2_inv(const permtri_tower* t, uint32_t xa, uint32_t xb, uint32_t* oa,
                               uint32_t* ob);
permtri_status permtri_fq2_pow(const permtri_tower* t, uint32_t xa, uint32_t xb, uint64_t e,
                               uint32_t* oa, uint32_t* ob);
permtri_status permtri_fq2_frobenius(const permtri_tower* t, uint32_t xa, uint32_t xb,
                                     uint32_t* oa, uint32_t* ob);
permtri_status permtri_fq2_norm(const permtri_tower* t, uint32_t xa, uint32_t xb, uint32_t* out);

/* --- trinomial verdicts ---------------------------------------------------- */

permtri_status permtri_eval_f(const permtri_tower* t, uint32_t aa, uint32_t ab, uint32_t ba,
                              uint32_t bb, uint32_t xa, uint32_t xb, uint32_t* oa, uint32_t* ob);

/* *defined is 0 at a pole of g; the value is meaningful only when defined. */
permtri_status permtri_eval_g(const permtri_tower* t, uint32_t aa, uint32_t ab, uint32_t ba,
                              uint32_t bb, uint32_t ua, uint32_t ub, int* defined, uint32_t* oa,
                              uint32_t* ob);

permtri_status permtri_is_perm_mu(const permtri_tower* t, uint32_t aa, uint32_t ab, uint32_t ba,
                                  uint32_t bb, int* out);
permtri_status permtri_is_pp_bruteforce(const permtri_tower* t, uint32_t aa, uint32_t ab,
                                        uint32_t ba, uint32_t bb, int* out);

/*
 * condition: 0 = neither, 1, 2. case_id: 0 or the matching splitting case.
 */
permtri_status permtri_classify(const permtri_tower* t, uint32_t aa, uint32_t ab, uint32_t ba,
                                uint32_t bb, int* condition, int* case_id);

/* --- curve ---------------------------------------------------------------- */

/* gamma[3*j + l] receives the coefficient of x^j y^l, 0 <= j,l <= 2. */
permtri_status permtri_gamma_coeffs(const permtri_tower* t, uint32_t A, uint32_t B, uint32_t C,
                                    uint32_t D, uint32_t gamma[9]);

permtri_status permtri_count_points_off_diagonal(const permtri_tower* t, uint32_t A, uint32_t B,
                                                 uint32_t C, uint32_t D, uint64_t* count);

/* JSON report {split_type, case_id, witness_params}; free with permtri_string_free. */
permtri_status permtri_split_analysis(const permtri_tower* t, uint32_t A, uint32_t B, uint32_t C,
                                      uint32_t D, char** json_out);

/* --- toolkit commands ------------------------------------------------------ */

/*
 * Five verdicts for one pair plus a consistency flag, as JSON. When
 * consistent is nonzero the brute-force, mu-permutation, condition and
 * curve views of the pair all agree.
 */
permtri_status permtri_verify_pair(const permtri_tower* t, uint32_t aa, uint32_t ab, uint32_t ba,
                                   uint32_t bb, char** json_out, int* consistent);

/*
 * Full sweep over all pairs with alpha*beta != 0. mode is "bruteforce",
 * "mu" or "condition"; format is "csv" or "json". out_path may be NULL to
 * skip the artifact and only compute the summary. The summary JSON carries
 * q, total_pairs_checked, pp_count, cond1_count, cond2_count, mismatches.
 * The projected work is limited by the PERMTRI_BUDGET environment variable
 * (default 5e10 element operations).
 */
permtri_status permtri_enumerate(const permtri_tower* t, const char* mode, uint32_t workers,
                                 const char* format, const char* out_path, char** summary_json);

/*
 * Runs the symbolic derivation suites: "curve", "conics", "chains" or "all".
 * The JSON report lists each derivation with per-step hashes and verdicts.
 * *all_passed is nonzero iff every derivation passed.
 */
permtri_status permtri_symbolic_run(const char* suite, char** json_out, int* all_passed);

void permtri_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PERMTRI_H */
