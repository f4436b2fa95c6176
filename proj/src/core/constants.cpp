#include "constants.hpp"

namespace cavspin {

const PhysicalConstants& constants() {
    static const PhysicalConstants c = [] {
        PhysicalConstants p{};
        p.hbar_c = 197.3269804;                 // eV nm
        p.electron_rest_energy = 510998.95;     // eV
        p.bohr_magneton = 5.7883818060e-5;      // eV/T
        p.eta = p.hbar_c / (2.0 * p.electron_rest_energy);
        p.elementary_charge_coulomb = 1.602176634e-19;
        return p;
    }();
    return c;
}

double wavevector_to_si(double k_per_nm) { return k_per_nm * 1e9; }

double charge_density_to_si(double q_e_per_nm3) {
    // 1 e/nm^3 = e_C * 1e27 C/m^3
    return q_e_per_nm3 * constants().elementary_charge_coulomb * 1e27;
}

}  // namespace cavspin
