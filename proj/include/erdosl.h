/* erdosl: certified computations around L-series of sign functions with a
 * fixed odd period: population enumeration, certified L(k,f) evaluation,
 * generalized cotangent Dedekind sums with reciprocity, distribution moments,
 * and exhaustive non-vanishing verification.
 *
 * Conventions:
 *  - every function returns an erdosl_status (0 = success) unless noted;
 *  - results come back through opaque handles released with the matching
 *    *_free call; strings are heap-allocated and released with
 *    erdosl_free_string;
 *  - certified values carry a midpoint and a rigorous radius: the true value
 *    always lies within [mid - rad, mid + rad].
 */

#ifndef ERDOSL_H
#define ERDOSL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef ERDOSL_API
#define ERDOSL_API __attribute__((visibility("default")))
#endif

typedef enum erdosl_status {
  ERDOSL_OK = 0,
  ERDOSL_END = 1,              /* iterator exhausted (not an error) */
  ERDOSL_ERR_INVALID = 2,      /* malformed input */
  ERDOSL_ERR_SINGULAR = 3,     /* singular cotangent argument / zero division */
  ERDOSL_ERR_PARITY = 4,       /* parity precondition violated */
  ERDOSL_ERR_NOT_COPRIME = 5,
  ERDOSL_ERR_EMPTY = 6,        /* empty population */
  ERDOSL_ERR_TOO_LARGE = 7,    /* beyond an enumeration guard */
  ERDOSL_ERR_PRECISION = 8,    /* precision exhausted / undecided values */
  ERDOSL_ERR_RECONSTRUCT = 9,  /* rational reconstruction failed */
  ERDOSL_ERR_UNAVAILABLE = 10, /* required bound unavailable */
  ERDOSL_ERR_INTERNAL = 11
} erdosl_status;

typedef struct erdosl_ctx erdosl_ctx;
typedef struct erdosl_fn erdosl_fn;
typedef struct erdosl_fn_iter erdosl_fn_iter;
typedef struct erdosl_real erdosl_real;
typedef struct erdosl_rat erdosl_rat;
typedef struct erdosl_poly erdosl_poly;
typedef struct erdosl_moment erdosl_moment;
typedef struct erdosl_table erdosl_table;
typedef struct erdosl_density erdosl_density;
typedef struct erdosl_verification erdosl_verification;

/* parity filters / classifications */
#define ERDOSL_PARITY_ODD 0
#define ERDOSL_PARITY_EVEN 1
#define ERDOSL_PARITY_NEITHER 2
#define ERDOSL_PARITY_ALL (-1)

/* L-value methods */
#define ERDOSL_METHOD_DIRECT 0
#define ERDOSL_METHOD_DIGAMMA 1
#define ERDOSL_METHOD_CLOSED 2

/* moment methods */
#define ERDOSL_MOMENT_ENUMERATION 0
#define ERDOSL_MOMENT_PARTITION 1
#define ERDOSL_MOMENT_PAPER 2
#define ERDOSL_MOMENT_MONTECARLO 3
#define ERDOSL_MOMENT_LIMIT 4

/* density modes */
#define ERDOSL_DENSITY_EXACT 0
#define ERDOSL_DENSITY_BOUND 1

ERDOSL_API const char* erdosl_version(void);
/* Thread-local message describing the most recent failure. */
ERDOSL_API const char* erdosl_last_error(void);
ERDOSL_API void erdosl_free_string(char* s);

/* --- precision context ------------------------------------------------- */
ERDOSL_API erdosl_status erdosl_ctx_new(long precision_bits, erdosl_ctx** out);
ERDOSL_API void erdosl_ctx_free(erdosl_ctx* ctx);

/* --- certified reals and exact rationals -------------------------------- */
ERDOSL_API void erdosl_real_free(erdosl_real* r);
ERDOSL_API erdosl_status erdosl_real_mid_dec(const erdosl_real* r, int digits, char** out);
ERDOSL_API erdosl_status erdosl_real_rad_dec(const erdosl_real* r, char** out);
ERDOSL_API erdosl_status erdosl_real_mid_hex(const erdosl_real* r, char** out);
ERDOSL_API erdosl_status erdosl_real_rad_hex(const erdosl_real* r, char** out);
ERDOSL_API double erdosl_real_mid_d(const erdosl_real* r);
ERDOSL_API double erdosl_real_rad_d(const erdosl_real* r);
/* -1/+1 when certified nonzero, 0 when undecided. */
ERDOSL_API int erdosl_real_certified_sign(const erdosl_real* r);
/* 1 when the two enclosures intersect (exact rational test). */
ERDOSL_API int erdosl_real_overlaps(const erdosl_real* a, const erdosl_real* b);

ERDOSL_API void erdosl_rat_free(erdosl_rat* r);
ERDOSL_API erdosl_status erdosl_rat_num(const erdosl_rat* r, char** out);
ERDOSL_API erdosl_status erdosl_rat_den(const erdosl_rat* r, char** out);

/* --- sign functions and enumeration ------------------------------------- */
ERDOSL_API erdosl_status erdosl_fn_parse(const char* signs, erdosl_fn** out);
ERDOSL_API void erdosl_fn_free(erdosl_fn* f);
ERDOSL_API erdosl_status erdosl_fn_format(const erdosl_fn* f, char** out);
ERDOSL_API unsigned long erdosl_fn_q(const erdosl_fn* f);
ERDOSL_API int erdosl_fn_parity(const erdosl_fn* f);
ERDOSL_API erdosl_status erdosl_fn_negate(const erdosl_fn* f, erdosl_fn** out);

/* Exact population count (decimal string). parity: ERDOSL_PARITY_*. */
ERDOSL_API erdosl_status erdosl_enum_count(unsigned long q, int parity, char** out);
ERDOSL_API erdosl_status erdosl_enum_new(unsigned long q, int parity, erdosl_fn_iter** out);
/* ERDOSL_OK with a fresh handle, or ERDOSL_END. */
ERDOSL_API erdosl_status erdosl_enum_next(erdosl_fn_iter* it, erdosl_fn** out);
ERDOSL_API void erdosl_enum_free(erdosl_fn_iter* it);

/* --- L-values ------------------------------------------------------------ */
ERDOSL_API erdosl_status erdosl_l_value(const erdosl_fn* f, unsigned k, int method,
                                        const erdosl_ctx* ctx, erdosl_real** out);
ERDOSL_API erdosl_status erdosl_nonvanishing_bound(unsigned k, const erdosl_ctx* ctx,
                                                   erdosl_real** out);

/* --- Dedekind sums ------------------------------------------------------- */
ERDOSL_API erdosl_status erdosl_dedekind_sum(size_t len, const unsigned long* a,
                                             const unsigned* m, unsigned distinguished,
                                             const erdosl_ctx* ctx, erdosl_real** out);
ERDOSL_API erdosl_status erdosl_s_qk(unsigned u, unsigned long q, unsigned k,
                                     const erdosl_ctx* ctx, erdosl_real** out);
ERDOSL_API erdosl_status erdosl_reciprocity_rhs(size_t len, const unsigned long* a,
                                                const unsigned* m, erdosl_rat** out);
ERDOSL_API erdosl_status erdosl_reciprocity_residual(size_t len, const unsigned long* a,
                                                     const unsigned* m, const erdosl_ctx* ctx,
                                                     erdosl_real** out);
/* Calibrated reciprocity sign convention tag (for output metadata). */
ERDOSL_API erdosl_status erdosl_sign_convention(char** out);

ERDOSL_API erdosl_status erdosl_spoly(unsigned u, unsigned k, erdosl_poly** out);
ERDOSL_API void erdosl_poly_free(erdosl_poly* p);
ERDOSL_API unsigned erdosl_poly_degree(const erdosl_poly* p);
ERDOSL_API erdosl_status erdosl_poly_coefficient(const erdosl_poly* p, unsigned j,
                                                 erdosl_rat** out);

/* --- moments -------------------------------------------------------------- */
/* q = 0 requests the limiting moment (methods LIMIT and PAPER). */
ERDOSL_API erdosl_status erdosl_moment_compute(unsigned long q, unsigned k, unsigned order, int method,
                                       uint64_t samples, uint64_t seed, const erdosl_ctx* ctx,
                                       erdosl_moment** out);
ERDOSL_API void erdosl_moment_free(erdosl_moment* m);
ERDOSL_API const char* erdosl_moment_method(const erdosl_moment* m);
ERDOSL_API erdosl_status erdosl_moment_value(const erdosl_moment* m, erdosl_real** out);
/* 1 when an exact pi-power rational is attached. */
ERDOSL_API int erdosl_moment_has_exact(const erdosl_moment* m);
ERDOSL_API unsigned erdosl_moment_pi_exponent(const erdosl_moment* m);
ERDOSL_API erdosl_status erdosl_moment_coefficient(const erdosl_moment* m, erdosl_rat** out);
/* 1 when a Monte Carlo standard error is attached. */
ERDOSL_API int erdosl_moment_has_std_error(const erdosl_moment* m);
ERDOSL_API double erdosl_moment_std_error(const erdosl_moment* m);

/* --- distribution tables --------------------------------------------------- */
ERDOSL_API erdosl_status erdosl_distribution(unsigned long q, unsigned k, const erdosl_ctx* ctx,
                                             erdosl_table** out);
ERDOSL_API void erdosl_table_free(erdosl_table* t);
ERDOSL_API erdosl_status erdosl_table_cdf_csv(const erdosl_table* t, char** out);
ERDOSL_API erdosl_status erdosl_table_histogram_csv(const erdosl_table* t, unsigned bins,
                                                    char** out);

/* --- density and verification ----------------------------------------------- */
ERDOSL_API erdosl_status erdosl_vanishing_bound(unsigned long q, char** out);
ERDOSL_API erdosl_status erdosl_density_compute(unsigned long x, int mode, unsigned long guard_q,
                                        const erdosl_ctx* ctx, erdosl_density** out);
ERDOSL_API void erdosl_density_free(erdosl_density* d);
ERDOSL_API erdosl_status erdosl_density_numerator(const erdosl_density* d, char** out);
ERDOSL_API erdosl_status erdosl_density_denominator(const erdosl_density* d, char** out);
ERDOSL_API erdosl_status erdosl_density_ratio(const erdosl_density* d, erdosl_rat** out);
ERDOSL_API erdosl_status erdosl_density_csv(const erdosl_density* d, char** out);

ERDOSL_API erdosl_status erdosl_verify(unsigned long q, long max_bits, unsigned long guard_q,
                                       const erdosl_ctx* ctx, erdosl_verification** out);
ERDOSL_API void erdosl_verification_free(erdosl_verification* v);
ERDOSL_API erdosl_status erdosl_verification_population(const erdosl_verification* v, char** out);
ERDOSL_API uint64_t erdosl_verification_zero_count(const erdosl_verification* v);
ERDOSL_API uint64_t erdosl_verification_undecided(const erdosl_verification* v);
ERDOSL_API long erdosl_verification_final_bits(const erdosl_verification* v);
ERDOSL_API erdosl_status erdosl_verification_min_abs(const erdosl_verification* v,
                                                     erdosl_real** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ERDOSL_H */
