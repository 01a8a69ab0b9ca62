/*
 * apntri - analysis of the trivariate quadratic families G_a and H_a over
 * F_{2^m}^3: permutation/APN verdicts via univariate root criteria,
 * differential kernel measurements, good-parameter enumeration, and
 * diagonal/monomial equivalence searches.
 *
 * Field elements cross this boundary as uint32_t bit vectors: bit k is the
 * coefficient of alpha^k in the polynomial basis of the context's modulus.
 * All functions return APNTRI_OK or a status code; results come back
 * through out-pointers.
 */

#ifndef APNTRI_H
#define APNTRI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define APNTRI_API __declspec(dllexport)
#else
#define APNTRI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int apntri_status;

enum {
    APNTRI_OK = 0,
    APNTRI_ERR_DEGREE_OUT_OF_RANGE = 1,
    APNTRI_ERR_NON_IRREDUCIBLE_MODULUS = 2,
    APNTRI_ERR_GCD_VIOLATION = 3,
    APNTRI_ERR_ZERO_PARAMETER = 4,
    APNTRI_ERR_ZERO_DIRECTION = 5,
    APNTRI_ERR_DIVISION_BY_ZERO = 6,
    APNTRI_ERR_FIELD_TOO_LARGE = 7,
    APNTRI_ERR_BUDGET_EXCEEDED = 8,
    APNTRI_ERR_BAD_ARGUMENT = 9,
    APNTRI_ERR_BUFFER_TOO_SMALL = 10,
};

APNTRI_API const char *apntri_strerror(apntri_status s);

enum { APNTRI_FAMILY_G = 0, APNTRI_FAMILY_H = 1 };

enum {
    APNTRI_VARIANT_P = 0,       /* T^{q^2+q+1} + (aT^q + 1)^{q+1} */
    APNTRI_VARIANT_PPRIME = 1,  /* T^{q^2+q+1} + a T^{q^2+q} + 1  */
    APNTRI_VARIANT_Q = 2,       /* T^{q^2+q+1} + a T + 1          */
    APNTRI_VARIANT_QQ = 3,      /* T^{q^2+q+1} + a^q T + 1        */
    APNTRI_VARIANT_R = 4,       /* T^{q^2+q+1} + (aT + 1)^{q+1}   */
    APNTRI_VARIANT_S = 5,       /* T^{q^2+q+1} + a^q T^{q+1} + 1  */
};

enum {
    APNTRI_METHOD_AUTO = 0,
    APNTRI_METHOD_KERNEL = 1,
    APNTRI_METHOD_EXHAUSTIVE = 2,
    APNTRI_METHOD_IMAGE = 3,
    APNTRI_METHOD_ROOT = 4, /* theorem-derived, not measured */
};

enum {
    APNTRI_DIR_AXIS = 0,
    APNTRI_DIR_TYPE1 = 1,  /* C = 0,  A B != 0 */
    APNTRI_DIR_TYPE2A = 2, /* B = 0,  A C != 0 */
    APNTRI_DIR_TYPE2B = 3, /* A = 0,  B C != 0 */
    APNTRI_DIR_TYPE3 = 4,  /* A B C != 0       */
};

enum { APNTRI_GOOD_ROOTSCAN = 0, APNTRI_GOOD_GIMAGE = 1 };

enum {
    APNTRI_EQUIV_INEQUIVALENT = 0,
    APNTRI_EQUIV_EQUIVALENT = 1,
    APNTRI_EQUIV_BUDGET_EXCEEDED = 2,
};

/* ---- field context ----------------------------------------------------- */

typedef struct apntri_field apntri_field;

/* modulus 0 selects the lexicographically smallest irreducible degree-m
 * polynomial. theorem_mode enforces odd m and gcd(i, m) = 1. */
APNTRI_API apntri_status apntri_field_new(uint32_t m, uint32_t i, uint32_t modulus,
                                          int theorem_mode, apntri_field **out);
APNTRI_API void apntri_field_free(apntri_field *fd);

APNTRI_API uint32_t apntri_field_degree(const apntri_field *fd);
APNTRI_API uint32_t apntri_field_frob_exponent(const apntri_field *fd);
APNTRI_API uint64_t apntri_field_q(const apntri_field *fd);
APNTRI_API uint64_t apntri_field_exp_d(const apntri_field *fd); /* q^2 + q + 1 */
APNTRI_API uint32_t apntri_field_modulus(const apntri_field *fd);
APNTRI_API uint64_t apntri_field_order(const apntri_field *fd); /* 2^m - 1 */

/* ---- element arithmetic ------------------------------------------------ */

APNTRI_API uint32_t apntri_add(const apntri_field *fd, uint32_t x, uint32_t y);
APNTRI_API uint32_t apntri_mul(const apntri_field *fd, uint32_t x, uint32_t y);
APNTRI_API apntri_status apntri_inv(const apntri_field *fd, uint32_t x, uint32_t *out);
APNTRI_API uint32_t apntri_pow(const apntri_field *fd, uint32_t x, uint64_t e);
APNTRI_API uint32_t apntri_frob(const apntri_field *fd, uint32_t x); /* x^q */
APNTRI_API int apntri_trace(const apntri_field *fd, uint32_t x);
APNTRI_API int apntri_artin_schreier_solvable(const apntri_field *fd, uint32_t c);

/* ---- univariate root criteria ------------------------------------------ */

APNTRI_API apntri_status apntri_variant_eval(const apntri_field *fd, int variant, uint32_t a,
                                             uint32_t t, uint32_t *out);
/* roots may be NULL to only count; *count always receives the full count */
APNTRI_API apntri_status apntri_roots(const apntri_field *fd, int variant, uint32_t a,
                                      uint32_t *roots, size_t cap, uint32_t *count);
APNTRI_API apntri_status apntri_variants_root_consistent(const apntri_field *fd, uint32_t a,
                                                         int *consistent);
APNTRI_API apntri_status apntri_linearized_kernel_dim(const apntri_field *fd, uint32_t a,
                                                      uint32_t *dim);
/* det(A_L - I_3) == 0 for the product of Frobenius-twisted companion matrices */
APNTRI_API apntri_status apntri_companion_product_singular(const apntri_field *fd, uint32_t a,
                                                           int *singular);

/* ---- trivariate families ----------------------------------------------- */

APNTRI_API apntri_status apntri_family_eval(const apntri_field *fd, int family, uint32_t a,
                                            const uint32_t in[3], uint32_t out[3]);
APNTRI_API apntri_status apntri_diff_kernel_size(const apntri_field *fd, int family, uint32_t a,
                                                 const uint32_t dir[3], uint64_t *size);
/* family G only; predicted_exact is 0 for all-nonzero directions when Q_a
 * has roots (the theorem then gives a lower bound for the degenerate
 * subcase rather than an exact count) */
APNTRI_API apntri_status apntri_classify_direction(const apntri_field *fd, uint32_t a,
                                                   const uint32_t dir[3], int *dir_type,
                                                   uint64_t *predicted, int *predicted_exact,
                                                   uint64_t *measured);
APNTRI_API apntri_status apntri_h_poly(const apntri_field *fd, uint32_t a, const uint32_t dir[3],
                                       uint32_t *value);
APNTRI_API apntri_status apntri_h_factorization_check(const apntri_field *fd, uint32_t a, int *ok);

/* ---- permutation / APN checkers ---------------------------------------- */

APNTRI_API apntri_status apntri_is_permutation(const apntri_field *fd, int family, uint32_t a,
                                               uint32_t threads, int *is_perm);
/* witness (when non-NULL and not APN) receives the violating direction with
 * the smallest packed encoding; max_kernel is the kernel size there, or 2
 * when APN. method must be KERNEL, EXHAUSTIVE, or AUTO. */
APNTRI_API apntri_status apntri_is_apn(const apntri_field *fd, int family, uint32_t a, int method,
                                       uint32_t threads, int *is_apn, uint64_t *max_kernel,
                                       uint32_t witness[3]);

/* ---- parameter enumeration --------------------------------------------- */

APNTRI_API apntri_status apntri_good_set(const apntri_field *fd, int method, uint32_t threads,
                                         uint32_t *buf, size_t cap, uint32_t *count);
APNTRI_API apntri_status apntri_lower_bound(const apntri_field *fd, double *value,
                                            int64_t *ceiling);

typedef struct {
    uint64_t fiber_size;
    uint64_t value_count; /* #C_{fiber_size} */
} apntri_fiber_class;

typedef struct {
    uint64_t gamma_fiber;     /* sum_i (i^2 - i) #C_i */
    uint64_t gamma_direct;    /* direct curve count; only if with_direct */
    int has_gamma_direct;
    uint64_t collision_pairs; /* #{(x,y) : x != y, g(x) = g(y)} */
    uint64_t c0;              /* #C_0 */
    uint64_t good_count;      /* #{v != 0 : empty fiber} */
    double bound_value;
    int64_t bound_ceiling;
} apntri_fiber_summary;

APNTRI_API apntri_status apntri_fiber_stats(const apntri_field *fd, int with_direct,
                                            uint32_t threads, apntri_fiber_class *classes,
                                            size_t cap, size_t *n_classes,
                                            apntri_fiber_summary *summary);

/* ---- equivalence ------------------------------------------------------- */

APNTRI_API apntri_status apntri_diag_criterion(const apntri_field *fd, uint32_t a, int *holds);
APNTRI_API apntri_status apntri_d0(const apntri_field *fd, uint64_t *out);
/* witness layout: mu, nu, rho, lambda1, lambda2, lambda3 */
APNTRI_API apntri_status apntri_diag_search(const apntri_field *fd, int family, uint32_t a,
                                            int *found, uint32_t witness[6]);

typedef struct {
    uint8_t perm[3];     /* x_j <- scalars[j] * (x_{perm[j]})^{2^{twists[j]}} */
    uint32_t scalars[3];
    uint8_t twists[3];
} apntri_monomial_map;

typedef struct {
    int result;            /* APNTRI_EQUIV_* */
    uint64_t maps_searched;
    int monomial_scope_only; /* 1: exhaustion only proves monomial inequivalence */
    apntri_monomial_map inner;
    apntri_monomial_map outer;
} apntri_equiv_report;

APNTRI_API apntri_status apntri_el_search(const apntri_field *fd, int family_f, uint32_t a,
                                          int family_g, uint32_t b, uint64_t budget,
                                          apntri_equiv_report *out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* APNTRI_H */
