#include "interaction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "constants.hpp"
#include "radial.hpp"

namespace cavspin {

namespace {

struct RadialIntegrals {
    double norm_i, norm_ii;      // region pieces of the normalization denominator
    double moment_i, moment_ii;  // signed current moments (kappa^2 included in _ii)
};

RadialIntegrals closed_integrals(const EigenState& s) {
    const int l = s.qnums.l_azimuthal;
    const double r = s.geometry.radius_R;
    const double k2 = s.kappa * s.kappa;
    return {radial::j_norm_closed(l, s.zeta, r), k2 * radial::k_norm_closed(l, s.xi, r),
            radial::j_current_moment_closed(l, s.zeta, r),
            k2 * radial::k_current_moment_closed(l, s.xi, r)};
}

RadialIntegrals quad_integrals(const EigenState& s, const QuadratureConfig& cfg) {
    const int l = s.qnums.l_azimuthal;
    const double r = s.geometry.radius_R;
    const double k2 = s.kappa * s.kappa;
    return {radial::j_norm_quad(l, s.zeta, r, cfg).value,
            k2 * radial::k_norm_quad(l, s.xi, r, cfg).value,
            radial::j_current_moment_quad(l, s.zeta, r, cfg).value,
            k2 * radial::k_current_moment_quad(l, s.xi, r, cfg).value};
}

double masked(double part_i, double part_ii, RegionMask mask) {
    switch (mask) {
        case RegionMask::REGION_I: return part_i;
        case RegionMask::REGION_II: return part_ii;
        case RegionMask::ALL: return part_i + part_ii;
    }
    throw std::invalid_argument("bad RegionMask");
}

}  // namespace

double vector_potential(double b_tesla, double rho) {
    if (rho < 0.0) throw std::domain_error("vector_potential: rho must be >= 0");
    return 0.5 * b_tesla * rho;
}

double interaction_wave(const EigenState& s, double b_tesla, RegionMask mask,
                        const QuadratureConfig& cfg) {
    const RadialIntegrals q = quad_integrals(s, cfg);
    const double denom = q.norm_i + q.norm_ii;
    return constants().bohr_magneton * b_tesla * masked(q.moment_i, q.moment_ii, mask) / denom;
}

double interaction_particle(const EigenState& s, double b_tesla, RegionMask mask,
                            const QuadratureConfig& cfg) {
    const RadialIntegrals q = quad_integrals(s, cfg);
    const double denom = q.norm_i + q.norm_ii;
    return constants().bohr_magneton * b_tesla * masked(q.norm_i, q.norm_ii, mask) / denom;
}

double unity_ratio(const EigenState& s, const QuadratureConfig& cfg) {
    const RadialIntegrals q = quad_integrals(s, cfg);
    const double lp1 = s.qnums.l_azimuthal + 1.0;
    return std::abs(q.moment_i + q.moment_ii) / (lp1 * (q.norm_i + q.norm_ii));
}

InteractionReport interaction_report(const EigenState& s, double b_tesla,
                                     const QuadratureConfig& cfg) {
    const RadialIntegrals q = quad_integrals(s, cfg);
    const RadialIntegrals c = closed_integrals(s);
    const double mu_b_b = constants().bohr_magneton * b_tesla;
    const double lp1 = s.qnums.l_azimuthal + 1.0;

    InteractionReport r{};
    r.b_tesla = b_tesla;
    r.mu_b_b = mu_b_b;

    const double qd = q.norm_i + q.norm_ii;
    r.wave_total_signed = mu_b_b * (q.moment_i + q.moment_ii) / qd;
    r.wave_total = std::abs(r.wave_total_signed);
    r.wave_region_i = mu_b_b * std::abs(q.moment_i) / qd;
    r.wave_region_ii = mu_b_b * std::abs(q.moment_ii) / qd;
    r.particle_total = mu_b_b * (q.norm_i + q.norm_ii) / qd;
    r.particle_region_i = mu_b_b * q.norm_i / qd;
    r.particle_region_ii = mu_b_b * q.norm_ii / qd;

    const double cm = std::abs(c.moment_i + c.moment_ii);
    r.wave_fraction_i = std::abs(c.moment_i) / cm;
    r.wave_fraction_ii = std::abs(c.moment_ii) / cm;
    const double cd = c.norm_i + c.norm_ii;
    r.particle_fraction_i = c.norm_i / cd;
    r.particle_fraction_ii = c.norm_ii / cd;
    r.unity_ratio = cm / (lp1 * cd);

    const double qm = std::abs(q.moment_i + q.moment_ii);
    r.quad_wave_fraction_i = std::abs(q.moment_i) / qm;
    r.quad_wave_fraction_ii = std::abs(q.moment_ii) / qm;
    r.quad_particle_fraction_i = q.norm_i / qd;
    r.quad_particle_fraction_ii = q.norm_ii / qd;
    r.quad_unity_ratio = qm / (lp1 * qd);

    r.route_disagreement = std::max({std::abs(r.wave_fraction_i - r.quad_wave_fraction_i),
                                     std::abs(r.wave_fraction_ii - r.quad_wave_fraction_ii),
                                     std::abs(r.particle_fraction_i - r.quad_particle_fraction_i),
                                     std::abs(r.particle_fraction_ii - r.quad_particle_fraction_ii),
                                     std::abs(r.unity_ratio - r.quad_unity_ratio)});
    return r;
}

}  // namespace cavspin
