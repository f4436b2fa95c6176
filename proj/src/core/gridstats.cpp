#include "gridstats.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cavspin {

TorusStats torus_stats(const EigenState& s, int n_rho, int n_z, double rho_max, double iso_level,
                       const FieldOptions& opt) {
    if (n_rho < 2 || n_z < 2) throw std::invalid_argument("torus_stats: grid must be >= 2x2");
    if (!(rho_max > 0.0)) throw std::invalid_argument("torus_stats: rho_max must be > 0");
    if (!(iso_level > 0.0) || !(iso_level < 1.0))
        throw std::invalid_argument("torus_stats: iso_level must be in (0, 1)");

    const double d = s.geometry.half_height_d;
    std::vector<double> abs_j(static_cast<size_t>(n_rho) * n_z);
    TorusStats st{};
    st.iso_level = iso_level;
    for (int i = 0; i < n_rho; ++i) {
        const double rho = rho_max * i / (n_rho - 1);
        for (int j = 0; j < n_z; ++j) {
            const double z = -d + 2.0 * d * j / (n_z - 1);
            const double a = std::abs(current_density(s, rho, z, opt)[1]);
            abs_j[static_cast<size_t>(i) * n_z + j] = a;
            if (a > st.peak_abs_jphi) {
                st.peak_abs_jphi = a;
                st.peak_rho = rho;
                st.peak_z = z;
            }
        }
    }
    const double threshold = iso_level * st.peak_abs_jphi;
    double weight_all = 0.0, weight_inside = 0.0;
    for (int i = 0; i < n_rho; ++i) {
        const double rho = rho_max * i / (n_rho - 1);
        for (int j = 0; j < n_z; ++j) {
            if (abs_j[static_cast<size_t>(i) * n_z + j] >= threshold) {
                ++st.iso_point_count;
                weight_all += rho;
                if (rho < s.geometry.radius_R) weight_inside += rho;
            }
        }
    }
    st.iso_fraction_inside = weight_all > 0.0 ? weight_inside / weight_all : 0.0;
    return st;
}

}  // namespace cavspin
