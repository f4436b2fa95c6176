#pragma once

#include "model.hpp"
#include "quadrature.hpp"

// Magnetic-interaction energies of the solved state in a uniform axial field
// B, in two pictures:
//   wave:     int j_phi A_phi dV      (current density couples to A)
//   particle: int mu_B B P dV         (point moment carried with probability)
// Totals and per-region splits, each by adaptive quadrature and by the
// closed-form radial integrals. The closed forms are authoritative where the
// two routes are compared.

namespace cavspin {

// A_phi = B rho / 2 (T nm): uniform field B along z.
double vector_potential(double b_tesla, double rho);

// Signed interaction energy of the wave picture over the masked region(s):
// mu_B B x (masked current moment) / (full normalization denominator).
// Negative for spin-up states in B > 0; the reported magnitudes live in
// InteractionReport.
double interaction_wave(const EigenState& s, double b_tesla, RegionMask mask,
                        const QuadratureConfig& cfg = {});

// Particle-picture energy over the masked region(s); always >= 0 and exactly
// mu_B B for the ALL mask.
double interaction_particle(const EigenState& s, double b_tesla, RegionMask mask,
                            const QuadratureConfig& cfg = {});

// Quadrature value of the root identity: |current moment| / ((l+1) x norm).
// Equals 1 at a true eigenvalue; the l+1 factor extends the l = 0 identity
// (where the interaction is the pure spin moment) to states that also carry
// an orbital moment.
double unity_ratio(const EigenState& s, const QuadratureConfig& cfg = {});

struct InteractionReport {
    double b_tesla = 0.0;
    double mu_b_b = 0.0;  // eV

    // Energies (eV). Magnitudes from the quadrature route; the signed total
    // keeps the circulation orientation.
    double wave_total = 0.0, wave_region_i = 0.0, wave_region_ii = 0.0;
    double wave_total_signed = 0.0;
    double particle_total = 0.0, particle_region_i = 0.0, particle_region_ii = 0.0;

    // Headline fractions and unity ratio: closed-form route.
    double wave_fraction_i = 0.0, wave_fraction_ii = 0.0;
    double particle_fraction_i = 0.0, particle_fraction_ii = 0.0;
    double unity_ratio = 0.0;

    // Quadrature-route twins and the worst absolute disagreement.
    double quad_wave_fraction_i = 0.0, quad_wave_fraction_ii = 0.0;
    double quad_particle_fraction_i = 0.0, quad_particle_fraction_ii = 0.0;
    double quad_unity_ratio = 0.0;
    double route_disagreement = 0.0;
};

InteractionReport interaction_report(const EigenState& s, double b_tesla,
                                     const QuadratureConfig& cfg = {});

}  // namespace cavspin
