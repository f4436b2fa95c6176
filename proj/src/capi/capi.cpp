#include "cavspin/cavspin.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "../core/errors.hpp"
#include "../core/fields.hpp"
#include "../core/gridstats.hpp"
#include "../core/interaction.hpp"
#include "../core/model.hpp"
#include "../core/solver.hpp"

struct cavspin_state {
    cavspin::EigenState s;
    cavspin::FieldOptions field_opt;
    cavspin::QuadratureConfig quad_cfg;
};

namespace {

thread_local std::string g_last_error;

cavspin_status set_error(cavspin_status code, const char* what) {
    g_last_error = what ? what : "";
    return code;
}

// Runs fn, translating core exceptions into status codes.
template <typename Fn>
cavspin_status guarded(Fn&& fn) {
    try {
        fn();
        return CAVSPIN_OK;
    } catch (const cavspin::NoBoundStateError& e) {
        return set_error(CAVSPIN_ERR_NO_BOUND_STATE, e.what());
    } catch (const cavspin::NoSuchRootError& e) {
        return set_error(CAVSPIN_ERR_NO_SUCH_ROOT, e.what());
    } catch (const cavspin::ConvergenceError& e) {
        return set_error(CAVSPIN_ERR_NO_CONVERGENCE, e.what());
    } catch (const cavspin::TailBoundError& e) {
        return set_error(CAVSPIN_ERR_TAIL_BOUND, e.what());
    } catch (const cavspin::SpecFunOverflowError& e) {
        return set_error(CAVSPIN_ERR_OVERFLOW, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(CAVSPIN_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return set_error(CAVSPIN_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc& e) {
        return set_error(CAVSPIN_ERR_INTERNAL, "allocation failure");
    } catch (const std::exception& e) {
        return set_error(CAVSPIN_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(CAVSPIN_ERR_INTERNAL, "unknown error");
    }
}

cavspin_status require(bool ok, const char* msg) {
    return ok ? CAVSPIN_OK : set_error(CAVSPIN_ERR_INVALID_ARGUMENT, msg);
}

cavspin::CavityGeometry geometry_of(const cavspin_params& p) {
    return {p.radius_nm, p.half_height_nm, p.potential_ev};
}

cavspin::QuantumNumbers qnums_of(const cavspin_params& p) {
    cavspin::QuantumNumbers q;
    q.n_radial = p.n_radial;
    q.l_azimuthal = p.l_azimuthal;
    q.m_axial = p.m_axial;
    q.spin_up = true;
    return q;
}

struct SplitOptions {
    cavspin::SolverConfig solver;
    cavspin::QuadratureConfig quad;
    cavspin::FieldOptions field;
};

SplitOptions split_options(const cavspin_options* o) {
    SplitOptions s;
    if (!o) return s;
    s.solver.scan_points = o->scan_points;
    s.solver.root_rel_tol = o->root_rel_tol;
    s.solver.max_iterations = o->max_iterations;
    s.solver.use_exact_eta = o->use_exact_eta != 0;
    s.quad.rel_tol = o->quad_rel_tol;
    s.quad.abs_tol = o->quad_abs_tol;
    s.quad.max_depth = o->quad_max_depth;
    s.quad.tail_cutoff_factor = o->tail_cutoff_factor;
    s.field.exact_eta = o->use_exact_eta != 0;
    s.field.include_eta2_charge = o->include_eta2_charge != 0;
    return s;
}

}  // namespace

extern "C" {

const char* cavspin_status_name(cavspin_status status) {
    switch (status) {
        case CAVSPIN_OK: return "ok";
        case CAVSPIN_ERR_INVALID_ARGUMENT: return "invalid argument";
        case CAVSPIN_ERR_NO_BOUND_STATE: return "no bound state";
        case CAVSPIN_ERR_NO_SUCH_ROOT: return "no such root";
        case CAVSPIN_ERR_NO_CONVERGENCE: return "no convergence";
        case CAVSPIN_ERR_TAIL_BOUND: return "tail bound violation";
        case CAVSPIN_ERR_OVERFLOW: return "overflow";
        case CAVSPIN_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* cavspin_last_error(void) { return g_last_error.c_str(); }

const char* cavspin_version(void) { return "0.1.0"; }

void cavspin_options_init(cavspin_options* opt) {
    if (!opt) return;
    opt->scan_points = 2000;
    opt->root_rel_tol = 1e-12;
    opt->max_iterations = 200;
    opt->quad_rel_tol = 1e-11;
    opt->quad_abs_tol = 1e-15;
    opt->quad_max_depth = 60;
    opt->tail_cutoff_factor = 60.0;
    opt->use_exact_eta = 0;
    opt->include_eta2_charge = 0;
}

cavspin_status cavspin_solve(const cavspin_params* params, const cavspin_options* opt_or_null,
                             cavspin_state** out_state) {
    if (cavspin_status st = require(params && out_state, "cavspin_solve: null pointer")) return st;
    return guarded([&] {
        const SplitOptions o = split_options(opt_or_null);
        auto* handle = new cavspin_state{
            cavspin::solve_eigenstate(geometry_of(*params), qnums_of(*params), o.solver, o.quad),
            o.field, o.quad};
        *out_state = handle;
    });
}

void cavspin_state_free(cavspin_state* state) { delete state; }

cavspin_status cavspin_state_get_info(const cavspin_state* state, cavspin_state_info* out) {
    if (cavspin_status st = require(state && out, "cavspin_state_get_info: null pointer")) return st;
    return guarded([&] {
        const auto& s = state->s;
        const cavspin::BoundWindow w = cavspin::bound_window(s.geometry, s.qnums.m_axial);
        out->epsilon_ev = s.epsilon;
        out->k_axial_per_nm = s.k_axial;
        out->zeta_per_nm = s.zeta;
        out->xi_per_nm = s.xi;
        out->kappa = s.kappa;
        out->n_squared_per_nm3 = s.n_squared;
        out->boundary_residual = s.boundary_residual;
        out->eps_window_min_ev = w.eps_min;
        out->eps_window_max_ev = w.eps_max;
    });
}

cavspin_status cavspin_bound_window(const cavspin_params* params, double* out_eps_min_ev,
                                    double* out_eps_max_ev) {
    if (cavspin_status st =
            require(params && out_eps_min_ev && out_eps_max_ev, "cavspin_bound_window: null pointer"))
        return st;
    return guarded([&] {
        const cavspin::BoundWindow w =
            cavspin::bound_window(geometry_of(*params), params->m_axial);
        *out_eps_min_ev = w.eps_min;
        *out_eps_max_ev = w.eps_max;
    });
}

cavspin_status cavspin_scan(const cavspin_params* params, const cavspin_options* opt_or_null,
                            size_t n, double* out_epsilon_ev, double* out_residual) {
    if (cavspin_status st =
            require(params && out_epsilon_ev && out_residual, "cavspin_scan: null pointer"))
        return st;
    if (cavspin_status st = require(n >= 2 && n <= 100000000, "cavspin_scan: n out of range"))
        return st;
    return guarded([&] {
        const SplitOptions o = split_options(opt_or_null);
        const auto samples =
            cavspin::scan_residuals(geometry_of(*params), params->l_azimuthal, params->m_axial,
                                    static_cast<int>(n), o.solver.use_exact_eta);
        for (size_t i = 0; i < samples.size(); ++i) {
            out_epsilon_ev[i] = samples[i].first;
            out_residual[i] = samples[i].second;
        }
    });
}

cavspin_status cavspin_field_at(const cavspin_state* state, double rho_nm, double z_nm,
                                cavspin_field_sample* out) {
    if (cavspin_status st = require(state && out, "cavspin_field_at: null pointer")) return st;
    return guarded([&] {
        const cavspin::FieldSample f =
            cavspin::field_sample(state->s, rho_nm, z_nm, state->field_opt);
        out->rho_nm = f.rho;
        out->z_nm = f.z;
        out->charge_e_per_nm3 = f.charge;
        out->j_rho = f.j_rho;
        out->j_phi = f.j_phi;
        out->j_z = f.j_z;
        out->probability_per_nm3 = f.probability;
        out->region = static_cast<int>(f.region);
    });
}

cavspin_status cavspin_interaction(const cavspin_state* state, double b_tesla,
                                   cavspin_interaction_report* out) {
    if (cavspin_status st = require(state && out, "cavspin_interaction: null pointer")) return st;
    return guarded([&] {
        const cavspin::InteractionReport r =
            cavspin::interaction_report(state->s, b_tesla, state->quad_cfg);
        out->b_tesla = r.b_tesla;
        out->mu_b_b_ev = r.mu_b_b;
        out->wave_total_ev = r.wave_total;
        out->wave_region_i_ev = r.wave_region_i;
        out->wave_region_ii_ev = r.wave_region_ii;
        out->wave_total_signed_ev = r.wave_total_signed;
        out->particle_total_ev = r.particle_total;
        out->particle_region_i_ev = r.particle_region_i;
        out->particle_region_ii_ev = r.particle_region_ii;
        out->wave_fraction_i = r.wave_fraction_i;
        out->wave_fraction_ii = r.wave_fraction_ii;
        out->particle_fraction_i = r.particle_fraction_i;
        out->particle_fraction_ii = r.particle_fraction_ii;
        out->unity_ratio = r.unity_ratio;
        out->quad_wave_fraction_i = r.quad_wave_fraction_i;
        out->quad_wave_fraction_ii = r.quad_wave_fraction_ii;
        out->quad_particle_fraction_i = r.quad_particle_fraction_i;
        out->quad_particle_fraction_ii = r.quad_particle_fraction_ii;
        out->quad_unity_ratio = r.quad_unity_ratio;
        out->route_disagreement = r.route_disagreement;
    });
}

cavspin_status cavspin_interaction_masked(const cavspin_state* state, double b_tesla,
                                          cavspin_mask mask, double* out_wave_ev,
                                          double* out_particle_ev) {
    if (cavspin_status st = require(state && out_wave_ev && out_particle_ev,
                                    "cavspin_interaction_masked: null pointer"))
        return st;
    if (cavspin_status st = require(mask == CAVSPIN_MASK_I || mask == CAVSPIN_MASK_II ||
                                        mask == CAVSPIN_MASK_ALL,
                                    "cavspin_interaction_masked: bad mask"))
        return st;
    return guarded([&] {
        const auto m = static_cast<cavspin::RegionMask>(mask);
        *out_wave_ev = cavspin::interaction_wave(state->s, b_tesla, m, state->quad_cfg);
        *out_particle_ev = cavspin::interaction_particle(state->s, b_tesla, m, state->quad_cfg);
    });
}

cavspin_status cavspin_torus_stats_compute(const cavspin_state* state, int n_rho, int n_z,
                                           double rho_max_nm, double iso_level,
                                           cavspin_torus_stats* out) {
    if (cavspin_status st = require(state && out, "cavspin_torus_stats_compute: null pointer"))
        return st;
    return guarded([&] {
        const cavspin::TorusStats t =
            cavspin::torus_stats(state->s, n_rho, n_z, rho_max_nm, iso_level, state->field_opt);
        out->peak_abs_jphi = t.peak_abs_jphi;
        out->peak_rho_nm = t.peak_rho;
        out->peak_z_nm = t.peak_z;
        out->iso_level = t.iso_level;
        out->iso_point_count = t.iso_point_count;
        out->iso_fraction_inside = t.iso_fraction_inside;
    });
}

}  // extern "C"
