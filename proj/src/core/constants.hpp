#pragma once

// Physical constants and unit conversions. Everything downstream computes in
// internal units: energies in eV, lengths in nm, charges in units of e,
// magnetic flux density in tesla. Wave vectors then sit in O(0.1-1) nm^-1 and
// cavity-scale energies in meV, well away from floating-point extremes.

namespace cavspin {

struct PhysicalConstants {
    double hbar_c;                     // eV*nm
    double electron_rest_energy;       // eV (m c^2)
    double bohr_magneton;              // eV/T
    double eta;                        // nm, hbar/(2 m c) = hbar_c/(2 m c^2)
    double elementary_charge_coulomb;  // C
};

// CODATA 2018 values; eta is derived from the ratio so the identity
// eta * 2 * electron_rest_energy / hbar_c == 1 holds exactly.
const PhysicalConstants& constants();

// nm^-1 -> m^-1
double wavevector_to_si(double k_per_nm);

// e*nm^-3 -> C*m^-3
double charge_density_to_si(double q_e_per_nm3);

}  // namespace cavspin
