#ifndef CAVSPIN_H
#define CAVSPIN_H

/*
 * cavspin: relativistic electron eigenstates in a finite cylindrical cavity,
 * their four-current densities, and wave- vs particle-picture magnetic
 * interaction energies.
 *
 * C API over the C++ core: opaque state handles, integer status codes,
 * plain-old-data out-parameters. Every function returning cavspin_status
 * leaves its outputs untouched on failure; cavspin_last_error() returns a
 * thread-local message for the most recent failure on the calling thread.
 *
 * Units: nm, eV, tesla; charge densities in e/nm^3, current densities in
 * e*c/nm^3 (speed of light absorbed into the unit).
 */

#include <stddef.h>

#if defined(_WIN32)
#define CAVSPIN_API __declspec(dllexport)
#else
#define CAVSPIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cavspin_status {
    CAVSPIN_OK = 0,
    CAVSPIN_ERR_INVALID_ARGUMENT = 1, /* malformed input or out-of-domain value */
    CAVSPIN_ERR_NO_BOUND_STATE = 2,   /* window contains no matching root */
    CAVSPIN_ERR_NO_SUCH_ROOT = 3,     /* n_radial exceeds the root count */
    CAVSPIN_ERR_NO_CONVERGENCE = 4,   /* iteration/subdivision budget exhausted */
    CAVSPIN_ERR_TAIL_BOUND = 5,       /* tail integrand failed its decay promise */
    CAVSPIN_ERR_OVERFLOW = 6,         /* result not representable */
    CAVSPIN_ERR_INTERNAL = 7
} cavspin_status;

CAVSPIN_API const char* cavspin_status_name(cavspin_status status);
CAVSPIN_API const char* cavspin_last_error(void);
CAVSPIN_API const char* cavspin_version(void);

typedef struct cavspin_params {
    double radius_nm;     /* cavity radius R > 0 */
    double half_height_nm;/* half height d > 0 */
    double potential_ev;  /* radial barrier height U > 0 */
    int n_radial;         /* >= 1 */
    int l_azimuthal;      /* >= 0 */
    int m_axial;          /* odd, >= 1 */
} cavspin_params;

typedef struct cavspin_options {
    int scan_points;           /* default 2000 */
    double root_rel_tol;       /* default 1e-12 */
    int max_iterations;        /* default 200 */
    double quad_rel_tol;       /* default 1e-11 */
    double quad_abs_tol;       /* default 1e-15 */
    int quad_max_depth;        /* default 60 */
    double tail_cutoff_factor; /* default 60 */
    int use_exact_eta;         /* default 0: common small-component factor */
    int include_eta2_charge;   /* default 0: drop the eta^2 charge term */
} cavspin_options;

CAVSPIN_API void cavspin_options_init(cavspin_options* opt);

typedef struct cavspin_state cavspin_state; /* opaque solved eigenstate */

CAVSPIN_API cavspin_status cavspin_solve(const cavspin_params* params,
                                         const cavspin_options* opt_or_null,
                                         cavspin_state** out_state);
CAVSPIN_API void cavspin_state_free(cavspin_state* state);

typedef struct cavspin_state_info {
    double epsilon_ev;        /* eigenvalue above the rest energy */
    double k_axial_per_nm;
    double zeta_per_nm;       /* interior wave number */
    double xi_per_nm;         /* exterior decay constant */
    double kappa;             /* Region II amplitude coupling */
    double n_squared_per_nm3; /* squared normalization constant */
    double boundary_residual; /* normalized matching residual at the root */
    double eps_window_min_ev; /* bound window edges */
    double eps_window_max_ev;
} cavspin_state_info;

CAVSPIN_API cavspin_status cavspin_state_get_info(const cavspin_state* state,
                                                  cavspin_state_info* out);

/* Bound window for a geometry without solving. */
CAVSPIN_API cavspin_status cavspin_bound_window(const cavspin_params* params,
                                                double* out_eps_min_ev, double* out_eps_max_ev);

/* Matching-residual scan over the open bound window: fills n midpoint
 * samples, lowest energy first. */
CAVSPIN_API cavspin_status cavspin_scan(const cavspin_params* params,
                                        const cavspin_options* opt_or_null, size_t n,
                                        double* out_epsilon_ev, double* out_residual);

typedef enum cavspin_region {
    CAVSPIN_REGION_I = 0,  /* rho < R, |z| < d */
    CAVSPIN_REGION_II = 1, /* rho >= R, |z| < d */
    CAVSPIN_REGION_III = 2 /* |z| >= d; all densities zero */
} cavspin_region;

typedef struct cavspin_field_sample {
    double rho_nm, z_nm;
    double charge_e_per_nm3;
    double j_rho, j_phi, j_z; /* e*c/nm^3; j_rho and j_z are identically 0 */
    double probability_per_nm3;
    int region; /* cavspin_region */
} cavspin_field_sample;

CAVSPIN_API cavspin_status cavspin_field_at(const cavspin_state* state, double rho_nm, double z_nm,
                                            cavspin_field_sample* out);

typedef enum cavspin_mask {
    CAVSPIN_MASK_I = 0,
    CAVSPIN_MASK_II = 1,
    CAVSPIN_MASK_ALL = 2
} cavspin_mask;

typedef struct cavspin_interaction_report {
    double b_tesla;
    double mu_b_b_ev; /* Bohr-magneton energy at this field */

    /* energies in eV; magnitudes from the quadrature route */
    double wave_total_ev, wave_region_i_ev, wave_region_ii_ev;
    double wave_total_signed_ev; /* negative: circulation opposes B > 0 */
    double particle_total_ev, particle_region_i_ev, particle_region_ii_ev;

    /* closed-form (authoritative) fractions and root identity */
    double wave_fraction_i, wave_fraction_ii;
    double particle_fraction_i, particle_fraction_ii;
    double unity_ratio;

    /* quadrature-route twins and worst |closed - quadrature| */
    double quad_wave_fraction_i, quad_wave_fraction_ii;
    double quad_particle_fraction_i, quad_particle_fraction_ii;
    double quad_unity_ratio;
    double route_disagreement;
} cavspin_interaction_report;

CAVSPIN_API cavspin_status cavspin_interaction(const cavspin_state* state, double b_tesla,
                                               cavspin_interaction_report* out);

/* Masked interaction energies (eV). wave is signed; particle is >= 0. */
CAVSPIN_API cavspin_status cavspin_interaction_masked(const cavspin_state* state, double b_tesla,
                                                      cavspin_mask mask, double* out_wave_ev,
                                                      double* out_particle_ev);

typedef struct cavspin_torus_stats {
    double peak_abs_jphi;
    double peak_rho_nm, peak_z_nm;
    double iso_level;
    long iso_point_count;
    double iso_fraction_inside; /* 1.0: iso-region entirely at rho < R */
} cavspin_torus_stats;

CAVSPIN_API cavspin_status cavspin_torus_stats_compute(const cavspin_state* state, int n_rho,
                                                       int n_z, double rho_max_nm,
                                                       double iso_level,
                                                       cavspin_torus_stats* out);

#ifdef __cplusplus
}
#endif

#endif /* CAVSPIN_H */
