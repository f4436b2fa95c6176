#pragma once

#include <array>
#include <complex>

#include "model.hpp"
#include "quadrature.hpp"

// Pointwise evaluation of the solved state: bispinor components, charge and
// current densities, probability density, and the normalization integral.
// Everything is zero in Region III by construction.

namespace cavspin {

struct FieldOptions {
    // Use the per-region eta_I/eta_II factors instead of the common
    // hbar/(2mc) limit in the small components.
    bool exact_eta = false;
    // Keep the small components' eta^2 contribution to the charge density
    // (relative size ~ (eta zeta)^2 ~ 2e-9 for nm-scale cavities; dropped by
    // default to match the normalization convention).
    bool include_eta2_charge = false;
};

struct Bispinor {
    std::complex<double> c1, c2, c3, c4;  // c2 == 0 for spin-up states
};

struct FieldSample {
    double rho, z;                 // nm
    double charge;                 // e nm^-3
    double j_rho, j_phi, j_z;      // e c nm^-3; j_rho and j_z vanish identically
    double probability;            // nm^-3, charge / e
    Region region;
};

Bispinor bispinor_at(const EigenState& s, double rho, double phi, double z,
                     const FieldOptions& opt = {});

double charge_density(const EigenState& s, double rho, double z, const FieldOptions& opt = {});

// (j_rho, j_phi, j_z) from the closed-form profiles.
std::array<double, 3> current_density(const EigenState& s, double rho, double z,
                                      const FieldOptions& opt = {});

// Same observable built the long way round: bispinor quadratic forms with the
// explicit cylindrical alpha matrices. Exists to validate current_density.
std::array<double, 3> current_density_oracle(const EigenState& s, double rho, double phi, double z,
                                             const FieldOptions& opt = {});

double probability_density(const EigenState& s, double rho, double z,
                           const FieldOptions& opt = {});

FieldSample field_sample(const EigenState& s, double rho, double z, const FieldOptions& opt = {});

// N^2 by quadrature of the charge normalization integral; ignores
// s.n_squared. Must agree with the closed-form denominator to 1e-9.
double normalization(const EigenState& s, const QuadratureConfig& quad_cfg = {});

}  // namespace cavspin
