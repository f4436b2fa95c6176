#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Shared vocabulary: the cavity, the quantum numbers, and the solved
// eigenstate every field/interaction routine consumes.

namespace cavspin {

// Finite radial step of height barrier_U at rho = radius_R, hard walls at
// z = +/- half_height_d. Region I: rho < R, |z| < d. Region II: rho >= R,
// |z| < d. Region III: |z| >= d (wavefunction identically zero there).
struct CavityGeometry {
    double radius_R;       // nm
    double half_height_d;  // nm
    double barrier_U;      // eV

    void validate() const {
        if (!(radius_R > 0.0)) throw std::invalid_argument("radius_R must be > 0");
        if (!(half_height_d > 0.0)) throw std::invalid_argument("half_height_d must be > 0");
        if (!(barrier_U > 0.0)) throw std::invalid_argument("barrier_U must be > 0");
    }
};

// Spin-down partner states are out of scope; spin_up is kept explicit so the
// restriction is visible at call sites.
struct QuantumNumbers {
    int n_radial = 1;     // >= 1, index of the root in ascending energy
    int l_azimuthal = 0;  // >= 0
    int m_axial = 1;      // odd >= 1 (cosine axial standing waves)
    bool spin_up = true;

    void validate() const {
        if (n_radial < 1) throw std::invalid_argument("n_radial must be >= 1");
        if (l_azimuthal < 0) throw std::invalid_argument("l_azimuthal must be >= 0");
        if (m_axial < 1 || m_axial % 2 == 0)
            throw std::invalid_argument("m_axial must be odd and >= 1, got " + std::to_string(m_axial));
        if (!spin_up) throw std::invalid_argument("spin-down states are not supported");
    }
};

// Product of the solver; immutable once assembled.
//
// epsilon is E - mc^2 (the meV-scale quantity), never the total energy:
// storing E would lose ~9 digits to the 511 keV rest energy. xi is stored as
// the positive decay constant of the Region II tail. kappa carries the sign
// of J_l(zeta R): excited states with an interior radial node have kappa < 0.
struct EigenState {
    CavityGeometry geometry;
    QuantumNumbers qnums;
    double epsilon;            // eV
    double k_axial;            // nm^-1, m pi / (2 d)
    double zeta;               // nm^-1, interior wave number
    double xi;                 // nm^-1, exterior decay constant
    double kappa;              // Region II amplitude, J_l(zeta R) / K_l(xi R)
    double n_squared;          // nm^-3, squared normalization constant
    double boundary_residual;  // normalized matching residual at epsilon
};

enum class Region { I, II, III };

enum class RegionMask { REGION_I, REGION_II, ALL };

// Boundary convention: rho == R maps to Region II, |z| == d to Region III
// (measure zero either way).
inline Region classify_point(const CavityGeometry& g, double rho, double z) {
    if (rho < 0.0) throw std::domain_error("classify_point: rho must be >= 0");
    if (!(std::abs(z) < g.half_height_d)) return Region::III;
    return rho < g.radius_R ? Region::I : Region::II;
}

}  // namespace cavspin
