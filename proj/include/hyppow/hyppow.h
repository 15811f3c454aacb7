/*
 * hyppow -- Maclaurin coefficients of powers of the Gauss hypergeometric
 * function via closed-form linear recurrences, with convolution oracles,
 * identity verification suites, and benchmarks.
 *
 * C interface: opaque handles, status codes, malloc'd strings released
 * through hyppow_string_free. All functions are thread-safe; the error
 * detail from hyppow_last_error is thread-local.
 *
 * Parameters are passed as text to keep exactness across the boundary:
 * rationals as "p/q" (or integer/decimal literals), complex values as
 * "re+imi" (e.g. "0.3-0.25i").
 */

#ifndef HYPPOW_H
#define HYPPOW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hyppow_status {
  HYPPOW_OK = 0,
  HYPPOW_E_INVALID = 1,        /* malformed argument */
  HYPPOW_E_PARAM_GUARD = 2,    /* c (or a lower parameter) zero / negative integer */
  HYPPOW_E_ZERO_DENOM = 3,     /* recurrence denominator vanished, policy = error */
  HYPPOW_E_DOMAIN = 4,         /* argument outside |z| < 1 or function domain */
  HYPPOW_E_POLE = 5,           /* Gamma pole */
  HYPPOW_E_OVERFLOW = 6,       /* float overflow flagged */
  HYPPOW_E_LENGTH = 7,         /* sequence length mismatch */
  HYPPOW_E_UNKNOWN_FAMILY = 8,
  HYPPOW_E_MISSING_PARAM = 9,
  HYPPOW_E_VERIFY_FAIL = 10,   /* at least one verification report failed */
  HYPPOW_E_CROSSCHECK = 11,    /* benchmark outputs disagreed; no timings */
  HYPPOW_E_SERIES_CAP = 12,    /* exact sequences capped at N = 10000 */
  HYPPOW_E_NOMEM = 13,
} hyppow_status;

typedef enum hyppow_backend {
  HYPPOW_BACKEND_RATIONAL = 0, /* exact arbitrary-precision rationals */
  HYPPOW_BACKEND_COMPLEX = 1,  /* complex double precision */
} hyppow_backend;

typedef enum hyppow_method {
  HYPPOW_METHOD_RECURRENCE = 0,
  HYPPOW_METHOD_CAUCHY_BINARY = 1,
  HYPPOW_METHOD_CAUCHY_TRIPLE_LOOP = 2,
} hyppow_method;

typedef enum hyppow_zero_denom_policy {
  HYPPOW_ZERO_DENOM_SUBSTITUTE = 0, /* fill the index from the oracle, resume */
  HYPPOW_ZERO_DENOM_ERROR = 1,
} hyppow_zero_denom_policy;

/* Opaque coefficient sequence (terms plus family metadata). */
typedef struct hyppow_seq hyppow_seq;

/*
 * Coefficients of F(a,b;c;z)^power (power 2 or 3) for indices 0..n_max,
 * generated by the closed-form recurrence.
 */
hyppow_status hyppow_power_coeffs(const char* a, const char* b, const char* c,
                                  int power, long n_max, hyppow_backend backend,
                                  hyppow_zero_denom_policy policy,
                                  hyppow_seq** out);

/*
 * Coefficients of a named family. Family tokens: f2, f3, zero-balanced2,
 * k2, e2, k3, e3, chebyshev2, chebyshev3, legendre2, legendre3,
 * gegenbauer2, gegenbauer3, jacobi2, jacobi3, sin2, sin3, cos2, cos3,
 * contiguous2, contiguous3, kummer-product. Family parameters are passed
 * as parallel key/value string arrays (keys among m, alpha, beta, a, b, c).
 */
hyppow_status hyppow_family_coeffs(const char* family,
                                   const char* const* param_keys,
                                   const char* const* param_values,
                                   size_t n_params, long n_max,
                                   hyppow_backend backend,
                                   hyppow_zero_denom_policy policy,
                                   hyppow_seq** out);

long hyppow_seq_length(const hyppow_seq* seq);
/* Power of z multiplied by coefficient `index` under the family's exponent law. */
long hyppow_seq_exponent(const hyppow_seq* seq, long index);
/* Reduced fraction "p/q"; rational backend only. */
hyppow_status hyppow_seq_exact(const hyppow_seq* seq, long index, char** out);
/* Decimal string with the requested significant digits (both backends). */
hyppow_status hyppow_seq_decimal(const hyppow_seq* seq, long index,
                                 int sig_digits, char** out);
hyppow_status hyppow_seq_float(const hyppow_seq* seq, long index, double* re,
                               double* im);
/* Symbolic prefactor of the family: rational coefficient and power of pi. */
hyppow_status hyppow_seq_prefactor(const hyppow_seq* seq, char** coeff,
                                   int* pi_power);
const char* hyppow_seq_provenance(const hyppow_seq* seq);
int hyppow_seq_backend(const hyppow_seq* seq);
/* Indices that were filled from the oracle because a denominator vanished. */
long hyppow_seq_fallback_count(const hyppow_seq* seq);
long hyppow_seq_fallback_index(const hyppow_seq* seq, long i);
void hyppow_seq_free(hyppow_seq* seq);

/*
 * Truncated evaluation of a family series at z (|mapped argument| < 1),
 * growing N until the geometric tail bound drops below tail_target or
 * term_cap is reached. tail_bound is set to -1 when no bound is available.
 */
hyppow_status hyppow_family_eval(const char* family,
                                 const char* const* param_keys,
                                 const char* const* param_values,
                                 size_t n_params, const char* z,
                                 double tail_target, long term_cap,
                                 hyppow_backend backend, double* value_re,
                                 double* value_im, double* tail_bound,
                                 long* terms_used);

/*
 * Runs a verification suite: clausen, ramanujan-preece, monotonicity,
 * contiguous, corollary-specializations, or all. With n_params == 0 the
 * suite's default deterministic grid runs; otherwise the overrides select
 * a single parameter set (keys among a, b, c, alpha, beta, m). n_max <= 0
 * keeps the suite default. jobs <= 0 resolves to HYPPOW_JOBS or the
 * hardware concurrency. The JSON bundle is written either way; the return
 * value is HYPPOW_OK only when every report passed.
 */
hyppow_status hyppow_verify(const char* suite, const char* const* param_keys,
                            const char* const* param_values, size_t n_params,
                            long n_max, int jobs, char** bundle_json);

/*
 * Benchmarks coefficient generation. Either a family token or (via the
 * key/value parameters) a raw a,b,c,power description. Outputs of all
 * methods are cross-checked for equality before any timing is taken;
 * disagreement returns HYPPOW_E_CROSSCHECK and no results. inject_fault
 * deliberately corrupts one value to exercise that guard.
 */
hyppow_status hyppow_bench(const char* family, const char* const* param_keys,
                           const char* const* param_values, size_t n_params,
                           const long* n_values, size_t n_count,
                           const hyppow_method* methods, size_t m_count,
                           hyppow_backend backend, int inject_fault,
                           char** results_json);

/* 1 when the text parses as an exact rational ("p/q", integer or decimal). */
int hyppow_is_rational(const char* text);

void hyppow_string_free(char* s);
const char* hyppow_last_error(void);
const char* hyppow_status_name(hyppow_status status);
const char* hyppow_version(void);

#ifdef __cplusplus
}
#endif

#endif /* HYPPOW_H */
