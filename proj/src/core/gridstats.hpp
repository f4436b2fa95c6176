#pragma once

#include "fields.hpp"
#include "model.hpp"

// Grid sweep of |j_phi| over the (rho, z) half-plane: peak location and the
// iso-region statistics behind the torus-confinement check (the set where
// |j_phi| >= level x peak).

namespace cavspin {

struct TorusStats {
    double peak_abs_jphi = 0.0;  // e c nm^-3
    double peak_rho = 0.0;       // nm
    double peak_z = 0.0;         // nm
    double iso_level = 0.0;      // input echo, fraction of peak
    long iso_point_count = 0;
    // rho-weighted fraction of iso points with rho < R (volume measure);
    // 1.0 means the iso-region is entirely inside the cavity radius.
    double iso_fraction_inside = 0.0;
};

TorusStats torus_stats(const EigenState& s, int n_rho, int n_z, double rho_max, double iso_level,
                       const FieldOptions& opt = {});

}  // namespace cavspin
