/* tensor_atoms.h - C API of the tensor-atoms shared library.
 *
 * Exact computations on GL(n) tensor products: Gelfand-Tsetlin patterns,
 * plactic products, Littlewood-Richardson coefficients and the
 * Littlewood-Richardson measure, plus the statistical experiments built
 * on top of them.
 *
 * Conventions:
 *   - Weights are passed as comma-separated integers, e.g. "9,7,3",
 *     weakly decreasing; rank is inferred from the component count.
 *   - Spectra are comma-separated reals, weakly decreasing.
 *   - All returned strings are heap-allocated by the library and must be
 *     released with ta_string_free().
 *   - Every function returns a ta_status; on failure the outputs are left
 *     untouched and ta_last_error() describes the problem (thread-local).
 *   - A cap argument of 0 selects the built-in default of 10^6.
 *   - Exact quantities serialize as decimal strings ("c") and "num/den"
 *     fractions ("atom", "mass"); nothing exact is ever rendered as a
 *     float in JSON.
 */
#ifndef TENSOR_ATOMS_H
#define TENSOR_ATOMS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ta_status {
    TA_OK = 0,
    TA_ERR_INTERNAL = 1, /* invariant violation or non-convergence */
    TA_ERR_INPUT = 2,    /* unparsable or invalid input */
    TA_ERR_CAP = 3,      /* an exact enumeration would exceed its cap */
    TA_ERR_STAT = 4      /* a statistical acceptance test failed */
} ta_status;

const char* ta_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* ta_last_error(void);

void ta_string_free(char* s);

/* Dimension d_lambda as a decimal string, e.g. "9,7,3" -> "60". */
ta_status ta_dim(const char* lambda, char** out_decimal);

/* Shift-normalized form (last component zero): "9,7,3" -> "6,4,0". */
ta_status ta_weight_normalize(const char* weight, char** out_weight);

/* ---- Littlewood-Richardson decompositions ------------------------- */

typedef struct ta_lr ta_lr; /* opaque decomposition handle */

ta_status ta_lr_compute(const char* lambda, const char* mu, ta_lr** out);
void ta_lr_free(ta_lr* lr);

size_t ta_lr_term_count(const ta_lr* lr);

/* Term i (0-based; nu lexicographically decreasing): nu as "a,b,c",
 * multiplicity as a decimal string, atom as "num/den". Any output pointer
 * may be NULL. */
ta_status ta_lr_term(const ta_lr* lr, size_t i, char** out_nu, char** out_mult,
                     char** out_atom);

/* {"lambda": [...], "mu": [...], "terms": [{"nu": [...], "c": "<int>",
 *  "atom": "<num>/<den>"}]} */
ta_status ta_lr_json(const ta_lr* lr, char** out_json);

/* CSV with columns nu,c,atom_num,atom_den,approx. */
ta_status ta_lr_csv(const ta_lr* lr, char** out_csv);

/* ---- Distributional identity (first row vs. LR measure) ----------- */

/* Compares the law of nu_1 under P_{lambda,mu} with the law of
 * max_{k+l=n+1} a_k+b_l for independent uniform patterns. out_equal gets
 * 1 or 0; the JSON carries both exact distributions, the shift-normalized
 * inputs and the verdict. */
ta_status ta_identity_check(const char* lambda, const char* mu, uint64_t cap,
                            int* out_equal, char** out_json);

/* ---- Uniform pattern sampling ------------------------------------- */

/* JSON: {"lambda": [...], "count": ..., "seed": ..., "patterns": [[...row
 * arrays, top row first...], ...]}. Sample i draws from the stream derived
 * from (seed, i); byte-identical across platforms for fixed inputs. */
ta_status ta_sample_patterns(const char* lambda, uint64_t count, uint64_t seed,
                             uint64_t cap, char** out_json);

/* ---- Bound scans ---------------------------------------------------
 * Each scan emits a CSV table (columns lambda, mu_or_k, lhs_num, lhs_den,
 * scale_num, scale_den, ratio_num, ratio_den, witness, vacuous_flag) plus
 * a JSON summary holding the exact grid supremum and its witness row.
 * `workers` <= 1 runs serially; results are identical either way. */

ta_status ta_scan_theorem(int n, int max_gap, int workers, char** out_csv,
                          char** out_summary_json);

/* k = 0 scans every k in 1..n-1. */
ta_status ta_scan_firstrow(int n, int max_gap, int k, int workers, char** out_csv,
                           char** out_summary_json);

ta_status ta_scan_saturation(int n, int nmax, char** out_csv, char** out_summary_json);

/* ---- Random-matrix experiment -------------------------------------- */

/* Two-sample Kolmogorov-Smirnov comparison of the top eigenvalue of A+B
 * against the max corner-sum statistic; spectra entries prescribe the
 * eigenvalues. Writes the JSON report even when the test fails, in which
 * case the return value is TA_ERR_STAT. dump_csv_path, when non-NULL,
 * receives the raw sample streams as CSV. */
ta_status ta_rmt_experiment(const char* spec_a, const char* spec_b, uint64_t samples,
                            uint64_t seed, double significance,
                            const char* dump_csv_path, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TENSOR_ATOMS_H */
