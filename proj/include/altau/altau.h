/* C interface to the altau library. All objects are opaque and owned by the caller
 * once returned; release them with the matching *_free function (NULL is accepted).
 * Every function returning altau_status leaves a message in altau_last_error() on
 * failure. Outputs are exact: rationals are "num/den" strings in JSON. */
#ifndef ALTAU_H
#define ALTAU_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(ALTAU_BUILDING_LIBRARY)
#define ALTAU_API __declspec(dllexport)
#else
#define ALTAU_API __declspec(dllimport)
#endif
#else
#define ALTAU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum altau_status {
    ALTAU_OK = 0,
    /* The computation ran but an identity it checks does not hold. Output is still set. */
    ALTAU_CHECK_FAILED = 1,
    ALTAU_INVALID_ARGUMENT = 2,
    ALTAU_INTERNAL = 3
} altau_status;

typedef enum altau_format { ALTAU_FORMAT_JSON = 0, ALTAU_FORMAT_TEXT = 1 } altau_format;

typedef enum altau_arith { ALTAU_ADD = 0, ALTAU_SUB = 1, ALTAU_MUL = 2 } altau_arith;

/* Shared resolvent and derivation caches. A context may be used from several threads. */
typedef struct altau_context altau_context;
typedef struct altau_poly altau_poly;
typedef struct altau_text altau_text;

ALTAU_API const char *altau_version(void);
ALTAU_API const char *altau_status_string(altau_status status);
/* Message of the last failed call on this thread; "" if none. */
ALTAU_API const char *altau_last_error(void);

ALTAU_API altau_status altau_context_create(altau_context **out);
ALTAU_API void altau_context_free(altau_context *ctx);

ALTAU_API const char *altau_text_data(const altau_text *text);
ALTAU_API size_t altau_text_size(const altau_text *text);
ALTAU_API void altau_text_free(altau_text *text);

/* Polynomials in q[n+i], r[n+i] with rational coefficients. */
ALTAU_API altau_status altau_poly_parse(const char *text, altau_poly **out);
ALTAU_API altau_status altau_poly_from_json(const char *json, altau_poly **out);
ALTAU_API altau_status altau_poly_constant(const char *rational, altau_poly **out);
/* kind is 'q' or 'r'. */
ALTAU_API altau_status altau_poly_variable(char kind, int offset, altau_poly **out);
ALTAU_API altau_status altau_poly_arith(const altau_poly *a, const altau_poly *b, altau_arith op, altau_poly **out);
ALTAU_API altau_status altau_poly_shift(const altau_poly *f, int k, altau_poly **out);
/* 1 if equal, 0 if not, -1 on a NULL argument. */
ALTAU_API int altau_poly_equal(const altau_poly *a, const altau_poly *b);
ALTAU_API altau_status altau_poly_to_json(const altau_poly *f, altau_text **out);
ALTAU_API altau_status altau_poly_to_string(const altau_poly *f, altau_text **out);
ALTAU_API void altau_poly_free(altau_poly *f);

/* D_{alpha,p} f; alpha is '+' or '-'. */
ALTAU_API altau_status altau_apply_derivation(altau_context *ctx, char alpha, int p, const altau_poly *f,
                                              altau_poly **out);
/* d/dt f for the combined flow D_{+,1} - D_{-,1} - D_{+,0} + D_{-,0}. */
ALTAU_API altau_status altau_t_flow(altau_context *ctx, const altau_poly *f, altau_poly **out);

/* Coefficients a, b, c of R_sign up to `order`. */
ALTAU_API altau_status altau_resolvent(altau_context *ctx, char sign, int order, altau_format format,
                                       altau_text **out);
/* D_{alpha,p} of q[n] or r[n]; target is 'q' or 'r'. */
ALTAU_API altau_status altau_flow(altau_context *ctx, char alpha, int p, char target, altau_format format,
                                  altau_text **out);
/* Closed-formula table for a sign pattern such as "++-", all entries 0 <= i_v <= max. */
ALTAU_API altau_status altau_omega(altau_context *ctx, const char *pattern, int max, altau_format format,
                                   altau_text **out);
/* Tau-structure identities for p <= pmax, q <= qmax, r <= rmax. */
ALTAU_API altau_status altau_verify_tau(altau_context *ctx, int pmax, int qmax, int rmax, altau_format format,
                                        altau_text **out);
/* Closed formula against nested derivation; pattern NULL or "" runs all 2^k patterns. */
ALTAU_API altau_status altau_theorem_check(altau_context *ctx, int k, const char *pattern, int max, altau_format format,
                                           altau_text **out);
/* All identity suites; quick != 0 uses smaller truncations. */
ALTAU_API altau_status altau_verify_all(altau_context *ctx, int quick, altau_format format, altau_text **out);

/* Correlator spec such as "+1,-1" at lattice point n from the closed resolvents, with
 * the Toeplitz value at n - 1 alongside it. */
ALTAU_API altau_status altau_cue_correlator(const char *q, int n, const char *spec, altau_format format,
                                            altau_text **out);
/* Toeplitz, tau-function, resolvent and correlator checks up to mmax. With stable_only
 * the correlators outside the stable range are skipped. */
ALTAU_API altau_status altau_cue_check(const char *q, int mmax, int stable_only, altau_format format,
                                       altau_text **out);
/* P(L <= n) on the z x z' geometric lattice against the Toeplitz determinant. */
ALTAU_API altau_status altau_cue_lpp(int z, int zprime, int n, const char *q, unsigned long long samples,
                                     unsigned long long seed, altau_format format, altau_text **out);

#ifdef __cplusplus
}
#endif

#endif
