/*
 * glame: generalized Jacobi elliptic functions (two moduli) and the
 * spectral machinery of the associated periodic Schroedinger operator
 * f'' + (V + E) f = 0 with
 *
 *   V(z) = (alpha k1^2 k2^2 + beta k2^2) s^4
 *          - (gamma k1^2 + delta k2^2 + lambda k1^2 k2^2) s^2,
 *
 * including the catalog of all fifteen product eigenfunctions, the
 * trigonometric (Ince-type) five-term recurrences, truncated-determinant
 * spectra, and the exact enumeration routes that rediscover the catalog.
 *
 * C API over an opaque modulus handle; every fallible call returns a
 * glame_status.  All functions are thread-safe; handles are immutable
 * after creation.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef GLAME_H
#define GLAME_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef GLAME_API
#  if defined(_WIN32)
#    define GLAME_API __declspec(dllexport)
#  else
#    define GLAME_API __attribute__((visibility("default")))
#  endif
#endif


typedef enum glame_status {
    GLAME_OK = 0,
    GLAME_ERR_DOMAIN = 1,       /* argument outside the mathematical domain */
    GLAME_ERR_CONVERGENCE = 2,  /* iteration/truncation budget exhausted */
    GLAME_ERR_ARGUMENT = 3,     /* null pointer, bad size, unknown enum value */
    GLAME_ERR_INTERNAL = 4
} glame_status;

GLAME_API const char* glame_status_name(glame_status s);
GLAME_API const char* glame_version(void);

/* ---- moduli ---- */

typedef struct glame_modulus glame_modulus; /* opaque: validated (k1, k2) pair */

/* Requires 0 <= k2 <= k1 <= 1 and k2 < 1. */
GLAME_API glame_status glame_modulus_create(double k1, double k2, glame_modulus** out);
GLAME_API void glame_modulus_destroy(glame_modulus* m);
GLAME_API double glame_modulus_k1(const glame_modulus* m);
GLAME_API double glame_modulus_k2(const glame_modulus* m);
GLAME_API double glame_modulus_kappa(const glame_modulus* m);    /* reduced modulus */
GLAME_API double glame_modulus_k2prime(const glame_modulus* m);  /* sqrt(1 - k2^2) */

/* ---- classical elliptic layer ---- */

/* Complete elliptic integral of the first kind; 0 <= k < 1. */
GLAME_API glame_status glame_complete_k(double k, double* out);
/* sn, cn, dn for real u, 0 <= k <= 1 (k = 1 is the hyperbolic limit). */
GLAME_API glame_status glame_jacobi_scd(double u, double k, double* sn, double* cn, double* dn);

/* ---- generalized functions ---- */

typedef struct glame_point {
    double s, c, d1, d2;
} glame_point;

GLAME_API glame_status glame_eval(const glame_modulus* m, double u, glame_point* out);
/* s', c', d1', d2' */
GLAME_API glame_status glame_eval_derivatives(const glame_modulus* m, double u, double out[4]);
/* s'', c'', d1'' */
GLAME_API glame_status glame_eval_second_derivatives(const glame_modulus* m, double u, double out[3]);

typedef struct glame_branch_data {
    double u1_re, u1_im;
    double u2_re, u2_im;
    double u3_re, u3_im;
    double u4_re, u4_im;
    double real_period_s; /* also the period of c */
    double real_period_c;
    double real_period_d; /* common period of d1, d2 */
} glame_branch_data;

/* Requires 0 < k2 < k1 < 1. */
GLAME_API glame_status glame_get_branch_data(const glame_modulus* m, glame_branch_data* out);

/* Real periods 4 K(kappa)/k2' and 2 K(kappa)/k2'; requires k1 < 1. */
GLAME_API glame_status glame_real_periods(const glame_modulus* m, double* period_sc, double* period_d);

/* Generalized amplitude t = a(z) with sin(a(z)) = s(z). */
GLAME_API glame_status glame_amplitude(const glame_modulus* m, double z, double* out);

/* u(y) by quadrature of the defining integral; |y| < 1. */
GLAME_API glame_status glame_invert_hyperelliptic(const glame_modulus* m, double y, double* out);

/* ---- operator and catalog ---- */

typedef struct glame_params {
    double alpha, beta, gamma, delta, lambda;
} glame_params;

GLAME_API glame_status glame_potential(const glame_modulus* m, const glame_params* p, double z,
                             double* out);

/* Left side of the algebraic (Fuchsian) form at x = s^2; x must not be a
 * singular point and both moduli must be positive. */
GLAME_API glame_status glame_algebraic_residual(const glame_modulus* m, const glame_params* p, double e,
                                      double x, double f, double fp, double fpp, double* out);

typedef struct glame_catalog_entry {
    int alpha, beta, gamma, delta, lambda;
    int e0, e1, e2;        /* E = e0 + e1 k1^2 + e2 k2^2 */
    unsigned factors;      /* bit 0 = s, bit 1 = c, bit 2 = d1, bit 3 = d2 */
    char factors_str[16];  /* e.g. "s*d1*d2" */
} glame_catalog_entry;

GLAME_API int glame_catalog_size(void); /* 15 */
GLAME_API glame_status glame_catalog_get(int index, glame_catalog_entry* out);
GLAME_API glame_status glame_catalog_energy(const glame_modulus* m, int index, double* out);
/* Product eigenfunction value at z. */
GLAME_API glame_status glame_catalog_eigenfunction(const glame_modulus* m, int index, double z,
                                         double* out);
/* Normalized max residual of entry `index` on `grid_points` points spanning
 * one real s-period, with the eigenvalue shifted by e_offset. */
GLAME_API glame_status glame_catalog_residual(const glame_modulus* m, int index, double e_offset,
                                    int grid_points, double* out);
/* CSV table (header alpha,beta,...,factors).  Writes at most cap bytes
 * including the terminator; fails with GLAME_ERR_ARGUMENT if cap is too
 * small. */
GLAME_API glame_status glame_catalog_csv(char* buf, size_t cap);

/* ---- trigonometric form and spectra ---- */

typedef enum glame_fourier_class {
    GLAME_EVEN_PI = 0,
    GLAME_ODD_PI = 1,
    GLAME_ODD_2PI = 2,
    GLAME_EVEN_2PI = 3
} glame_fourier_class;

typedef enum glame_transform {
    GLAME_TRANSFORM_STANDARD = 0,
    GLAME_TRANSFORM_D1_SHIFTED = 1,
    GLAME_TRANSFORM_D2_SHIFTED = 2
} glame_transform;

typedef struct glame_ince_coefficients {
    double a1, a2, b1, b2, cc, p1, p2;
    double denom;
} glame_ince_coefficients;

GLAME_API glame_status glame_get_ince_coefficients(const glame_modulus* m, const glame_params* p, double e,
                                     glame_transform t, glame_ince_coefficients* out);
GLAME_API glame_status glame_c_to_energy(const glame_modulus* m, const glame_params* p, double cc,
                               glame_transform t, double* out);
/* Q_i(mu) and Q*_i(mu), i in {1, 2}. */
GLAME_API double glame_q_poly(int i, double mu, const glame_ince_coefficients* co);
GLAME_API double glame_qstar_poly(int i, double mu, const glame_ince_coefficients* co);

/* n x n truncation (row-major, n >= 5) of the five-term recurrence. */
GLAME_API glame_status glame_recurrence_matrix(glame_fourier_class f, const glame_ince_coefficients* co,
                                     int n, double* out);

/* Lowest `count` characteristic energies, truncation-doubling checked to
 * 1e-8 (GLAME_ERR_CONVERGENCE past truncation 512). */
GLAME_API glame_status glame_hill_energies(const glame_modulus* m, const glame_params* p,
                                 glame_fourier_class f, glame_transform t, int n_trunc,
                                 int count, double* out);

typedef struct glame_coexistence_report {
    int degenerate_lame;        /* k1 k2 = 0: three-term case */
    int two_pi;
    double mu;                  /* root of the compatibility relation */
    int mu_integral;
    int forces_zero_potential;  /* integral mu admissible only with p1 = p2 = 0 */
    char note[160];
} glame_coexistence_report;

GLAME_API glame_status glame_coexistence(glame_fourier_class f, const glame_ince_coefficients* co,
                               glame_coexistence_report* out);

/* ---- enumeration of polynomial solutions ---- */

typedef struct glame_poly_solution {
    int alpha, beta, gamma, delta, lambda;
    int e0, e1, e2;
    unsigned factors;
    char factors_str[16];
    char route[48]; /* e.g. "even_pi/first_row/standard" or "series d1*d2,odd" */
} glame_poly_solution;

typedef enum glame_enum_route {
    GLAME_ROUTE_FOURIER = 0, /* leading row/column vanishing conditions */
    GLAME_ROUTE_SERIES = 1   /* power-series termination conditions */
} glame_enum_route;

/* Enumerates all parameter tuples with product eigenfunctions via the given
 * route; integer search box [box_lo, box_hi] applies to alpha, gamma,
 * delta, lambda.  Writes up to cap rows and the total in *count. */
GLAME_API glame_status glame_enumerate(glame_enum_route route, int box_lo, int box_hi,
                             glame_poly_solution* out, size_t cap, size_t* count);

/* ---- power-series recurrences ---- */

GLAME_API int glame_ansatz_count(void); /* 16 */
GLAME_API const char* glame_ansatz_name(int kind);

/* Band entries D, f, M1, M2 at index n. */
GLAME_API glame_status glame_band_row(int kind, int n, const glame_params* p, double e,
                            const glame_modulus* m, double out[4]);

/* First `count` series coefficients (a_0 = 1). */
GLAME_API glame_status glame_series_coefficients(int kind, const glame_params* p, double e,
                                       const glame_modulus* m, int count, double* out);

/* Plain-text report of every difference between the tabulated band entries
 * and the product-rule derivation (one line per finding, including the
 * resolved form in use). */
GLAME_API glame_status glame_band_discrepancies(char* buf, size_t cap);

#ifdef __cplusplus
}
#endif

#endif /* GLAME_H */
