/* cuspcollide C API
 *
 * Shared-library surface over the cusp-gap collision toolkit. All entry
 * points return cc_status; results travel through plain structs and opaque
 * handles. On any failure cc_last_error() carries a human-readable message
 * for the calling thread.
 */
#ifndef CUSPCOLLIDE_H
#define CUSPCOLLIDE_H

#include <stdint.h>

#if defined(_WIN32)
#define CC_API __declspec(dllexport)
#else
#define CC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
    CC_OK = 0,
    CC_ERROR_ARGUMENT = 1,  /* invalid parameter or domain violation */
    CC_ERROR_TOLERANCE = 2, /* quadrature failed to reach the tolerance */
    CC_ERROR_BRACKET = 3,   /* root search exhausted its bracket */
    CC_ERROR_IO = 4,        /* file access or parse failure */
    CC_ERROR_INTERNAL = 5
} cc_status;

CC_API const char* cc_status_str(cc_status status);
CC_API const char* cc_last_error(void); /* thread-local, valid until next call */
CC_API const char* cc_version(void);

/* ---- geometry ---------------------------------------------------------- */

/* Gap profile parameters from a flat key=value file (keys: alpha, h, r0,
 * d0). Inputs double as defaults for keys the file omits. */
CC_API cc_status cc_profile_load(const char* path, double* alpha, double* h, double* r0,
                                 double* d0);

/* 1 when h + r0^(1+alpha) <= d0 < r0 (the blended extension vanishes on the
 * container boundary by construction), else 0. */
CC_API int cc_profile_consistent(double alpha, double h, double r0, double d0);

/* 1 when (r, x3) lies in the gap {0 <= r < r0, 0 <= x3 <= h + r^(1+alpha)}. */
CC_API int cc_in_cusp(double alpha, double h, double r0, double d0, double r, double x3);

/* ---- gap test field ---------------------------------------------------- */

typedef enum cc_field_mode { CC_MODE_CUSP = 0, CC_MODE_EXTENDED = 1 } cc_field_mode;

typedef struct cc_field cc_field; /* opaque; immutable and thread-safe */

CC_API cc_status cc_field_create(double alpha, double h, double r0, double d0, int mode,
                                 cc_field** out);
CC_API void cc_field_destroy(cc_field* field);

CC_API cc_status cc_field_gap(const cc_field* field, double r, double* psi);

typedef struct cc_field_sample {
    double stream;
    double w_r, w_3;
    double frob_grad; /* Frobenius norm of the velocity gradient */
    double div;       /* dr_wr + wr/r + d3_w3 */
    double dh_wr, dh_w3;
} cc_field_sample;

CC_API cc_status cc_field_eval(const cc_field* field, double r, double x3,
                               cc_field_sample* out);

/* ---- gap norms and scaling --------------------------------------------- */

typedef enum cc_component {
    CC_COMPONENT_VALUE = 0,
    CC_COMPONENT_GRADIENT = 1,
    CC_COMPONENT_DH = 2
} cc_component;

/* q_grad = (3+alpha)/(1+2 alpha), q_val = 1 + 3/alpha */
CC_API cc_status cc_critical_exponents(double alpha, double* q_grad, double* q_val);

/* Blow-up rate sigma with norm ~ h^-sigma above the critical exponent of
 * the chosen component, 0 below it. */
CC_API cc_status cc_predicted_exponent(double alpha, double q, int component, double* sigma);

/* L^q norm of the selected component over the gap, volume measure
 * 2 pi r dr dx3, to relative tolerance rel_tol. */
CC_API cc_status cc_lq_norm(const cc_field* field, int component, double q, double rel_tol,
                            double* norm);

typedef struct cc_scaling_fit {
    double slope;        /* least-squares slope of log norm vs log h */
    double fit_residual; /* rms residual of that fit */
    double q_critical;
    double predicted_exponent;
    int expected_bounded;
    int pass; /* dichotomy verdict at the library tolerances */
} cc_scaling_fit;

/* Norm per h (fresh default-geometry profile each time) plus the log-log
 * fit; h values in any order, norms_out parallel to h after descending
 * sort. */
CC_API cc_status cc_lemma_sweep(double alpha, double q, int component, const double* h_values,
                                int n, double rel_tol, double* norms_out, double* h_sorted_out,
                                cc_scaling_fit* fit);

/* ---- admissibility regions --------------------------------------------- */

#define CC_NAME_LEN 32
#define CC_MAX_CONSTRAINTS 8

typedef struct cc_constraint {
    char name[CC_NAME_LEN];
    double value;
    int satisfied;
} cc_constraint;

typedef struct cc_region_verdict {
    int admissible;
    int boundary; /* inadmissible only through an equality case */
    double alpha_bound;
    char binding[CC_NAME_LEN];
    cc_constraint constraints[CC_MAX_CONSTRAINTS];
    int n_constraints;
} cc_region_verdict;

CC_API cc_status cc_region_full(double p, double gamma, double alpha, cc_region_verdict* out);
CC_API cc_status cc_region_noconv(double p, double gamma, double alpha, cc_region_verdict* out);
CC_API cc_status cc_region_heat(double gamma, double beta, double alpha,
                                cc_region_verdict* out);

/* Per-term thresholds feeding the admissibility minimum. */
CC_API cc_status cc_auxiliary_thresholds(double p, double gamma, double alpha,
                                         cc_constraint* out, int capacity, int* count);

typedef enum cc_winner {
    CC_WINNER_DIFFUSIVE = 0,
    CC_WINNER_CONVECTIVE = 1,
    CC_WINNER_TIE = 2
} cc_winner;

CC_API cc_status cc_winner_full(double p, double gamma, int* winner);
CC_API cc_status cc_winner_noconv(double p, double gamma, int* winner);

/* Both statements of the first admissibility window. */
CC_API cc_status cc_equivalent_window(double p, double gamma, int* first, int* second);

/* 1 when alpha (q - 1) >= 3 (contact impossible in that regime). */
CC_API cc_status cc_starovoitov_blocked(double alpha, double q, int* blocked);

typedef enum cc_region_mode {
    CC_REGION_FULL = 0,
    CC_REGION_NOCONV = 1,
    CC_REGION_HEAT = 2
} cc_region_mode;

typedef struct cc_region_table cc_region_table; /* opaque sweep result */

/* Grid sweep of the selected admissibility map. Axes are (p, gamma), or
 * (gamma, beta) in heat mode. */
CC_API cc_status cc_region_sweep(int mode, double first_lo, double first_hi, double second_lo,
                                 double second_hi, int resolution, cc_region_table** out);
CC_API int cc_region_table_size(const cc_region_table* table);
CC_API cc_status cc_region_table_row(const cc_region_table* table, int index, double* first,
                                     double* second, double* alpha_bound,
                                     char binding[CC_NAME_LEN]);
CC_API void cc_region_table_destroy(cc_region_table* table);

/* ---- stress models ----------------------------------------------------- */

typedef enum cc_stress_model {
    CC_STRESS_POWER_LAW = 0,
    CC_STRESS_ACTIVATED_EULER = 1
} cc_stress_model;

typedef struct cc_stress_report {
    int samples;
    int monotone_violations;
    double monotone_min; /* min over sampled pairs of [S(M)-S(N)]:(M-N) */
    int growth_checked;  /* 0 when no documented envelope exists */
    int growth_violations;
    double growth_lower_margin;
    double growth_upper_margin;
    double envelope_p, envelope_c0, envelope_c1, envelope_delta;
    int pass;
} cc_stress_report;

/* Monotonicity on seeded random pairs plus the documented growth envelope:
 * exact equality envelope for the power law, the (c0=1/2, delta=delta0^2/2,
 * c1=1, p=2) envelope for the activated model. delta0 is ignored for the
 * power law, p for the activated model. */
CC_API cc_status cc_stress_check(int model, double p, double delta0, int samples, uint64_t seed,
                                 cc_stress_report* out);

/* ---- collision budget -------------------------------------------------- */

typedef struct cc_feasibility_report {
    double E0;
    double K;
    int collides;      /* K < 1 */
    double time_bound; /* K/(1-K); meaningful only when collides */
} cc_feasibility_report;

CC_API cc_status cc_feasibility(double c0, double m, double fluid_energy, double v0, double j0,
                                double omega0, double gamma, double p,
                                cc_feasibility_report* out);

/* Minimal mass with V0 = v0_coeff/sqrt(m), omega0 = omega0_coeff/sqrt(m)
 * and specific inertia j0, which makes E0 mass independent. branch is
 * "heavy", "light" (threshold below unit mass) or "bracket_lo". */
CC_API cc_status cc_min_mass(double c0, double fluid_energy, double v0_coeff,
                             double omega0_coeff, double j0, double gamma, double p,
                             double* mass, double* e0, double* k_at_mass,
                             char branch[CC_NAME_LEN]);

/* ---- quasi-static settling --------------------------------------------- */

typedef struct cc_trajectory cc_trajectory; /* opaque (t, h) series */

/* hdot = -m g / (c h^-sigma); record_stride > 1 thins the stored series. */
CC_API cc_status cc_fall(double m, double g, double c, double sigma, double h0,
                         int record_stride, cc_trajectory** out);
CC_API long cc_trajectory_size(const cc_trajectory* trajectory);
CC_API cc_status cc_trajectory_point(const cc_trajectory* trajectory, long index, double* t,
                                     double* h);
/* 1 and fills t when the gap closes in finite time, else 0. */
CC_API int cc_trajectory_touchdown(const cc_trajectory* trajectory, double* t);
CC_API void cc_trajectory_destroy(cc_trajectory* trajectory);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CUSPCOLLIDE_H */
