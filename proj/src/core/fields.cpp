#include "fields.hpp"

#include <cmath>
#include <numbers>

#include "bessel.hpp"
#include "constants.hpp"
#include "radial.hpp"

namespace cavspin {

namespace {

struct EtaPair {
    double region_i;
    double region_ii;
};

EtaPair etas(const EigenState& s, const FieldOptions& opt) {
    const auto& c = constants();
    if (!opt.exact_eta) return {c.eta, c.eta};
    const double two_mc2 = 2.0 * c.electron_rest_energy;
    return {c.hbar_c / (two_mc2 + s.epsilon), c.hbar_c / (two_mc2 + s.epsilon - s.geometry.barrier_U)};
}

// Radial profile of the interior state: value of J_l(zeta rho) and the
// fourth-component factor zeta J_l' - (l/rho) J_l. The factor has a finite
// limit 0 at rho = 0 for every l.
struct RadialParts {
    double value;   // amplitude-carrying radial function (J or kappa K)
    double fourth;  // radial factor of the fourth spinor component
};

RadialParts radial_parts(const EigenState& s, Region region, double rho) {
    const int l = s.qnums.l_azimuthal;
    if (region == Region::I) {
        const double x = s.zeta * rho;
        const double j = bessel_j(l, x);
        double f4 = 0.0;
        if (rho > 0.0) f4 = s.zeta * bessel_j_deriv(l, x) - l / rho * j;
        return {j, f4};
    }
    const double x = s.xi * rho;
    const double k = bessel_k(l, x);
    const double f4 = s.xi * bessel_k_deriv(l, x) - l / rho * k;
    return {s.kappa * k, s.kappa * f4};
}

}  // namespace

Bispinor bispinor_at(const EigenState& s, double rho, double phi, double z,
                     const FieldOptions& opt) {
    const Region region = classify_point(s.geometry, rho, z);
    if (region == Region::III) return {};
    const EtaPair eta = etas(s, opt);
    const double eta_r = region == Region::I ? eta.region_i : eta.region_ii;
    const RadialParts rp = radial_parts(s, region, rho);
    const double n = std::sqrt(s.n_squared);
    const int l = s.qnums.l_azimuthal;
    const double cos_kz = std::cos(s.k_axial * z);
    const double sin_kz = std::sin(s.k_axial * z);
    const std::complex<double> phase = std::polar(1.0, l * phi);
    const std::complex<double> i_unit(0.0, 1.0);

    Bispinor b{};
    b.c1 = n * rp.value * cos_kz * phase;
    b.c2 = 0.0;
    b.c3 = -i_unit * eta_r * s.k_axial * n * rp.value * sin_kz * phase;
    b.c4 = i_unit * std::polar(1.0, (l + 1) * phi) * eta_r * n * rp.fourth * cos_kz;
    return b;
}

double charge_density(const EigenState& s, double rho, double z, const FieldOptions& opt) {
    const Region region = classify_point(s.geometry, rho, z);
    if (region == Region::III) return 0.0;
    const RadialParts rp = radial_parts(s, region, rho);
    const double cos_kz = std::cos(s.k_axial * z);
    double q = rp.value * rp.value * cos_kz * cos_kz;
    if (opt.include_eta2_charge) {
        const EtaPair eta = etas(s, opt);
        const double eta_r = region == Region::I ? eta.region_i : eta.region_ii;
        const double sin_kz = std::sin(s.k_axial * z);
        q += eta_r * eta_r *
             (s.k_axial * s.k_axial * rp.value * rp.value * sin_kz * sin_kz +
              rp.fourth * rp.fourth * cos_kz * cos_kz);
    }
    return s.n_squared * q;
}

std::array<double, 3> current_density(const EigenState& s, double rho, double z,
                                      const FieldOptions& opt) {
    const Region region = classify_point(s.geometry, rho, z);
    if (region == Region::III) return {0.0, 0.0, 0.0};
    const EtaPair eta = etas(s, opt);
    const double eta_r = region == Region::I ? eta.region_i : eta.region_ii;
    const RadialParts rp = radial_parts(s, region, rho);
    const double cos_kz = std::cos(s.k_axial * z);
    const double j_phi = 2.0 * s.n_squared * eta_r * rp.value * rp.fourth * cos_kz * cos_kz;
    return {0.0, j_phi, 0.0};
}

std::array<double, 3> current_density_oracle(const EigenState& s, double rho, double phi, double z,
                                             const FieldOptions& opt) {
    if (!(rho > 0.0)) throw std::domain_error("current_density_oracle: rho must be > 0");
    const Bispinor b = bispinor_at(s, rho, phi, z, opt);
    const std::complex<double> i_unit(0.0, 1.0);
    const std::complex<double> em = std::polar(1.0, -phi);  // e^{-i phi}
    const std::complex<double> ep = std::polar(1.0, +phi);

    // alpha_rho psi, alpha_phi psi, alpha_z psi with the explicit matrices.
    const std::complex<double> ar[4] = {em * b.c4, ep * b.c3, em * b.c2, ep * b.c1};
    const std::complex<double> ap[4] = {-i_unit * em * b.c4, i_unit * ep * b.c3,
                                        -i_unit * em * b.c2, i_unit * ep * b.c1};
    const std::complex<double> az[4] = {b.c3, -b.c4, b.c1, -b.c2};

    auto form = [&](const std::complex<double> v[4]) {
        return (std::conj(b.c1) * v[0] + std::conj(b.c2) * v[1] + std::conj(b.c3) * v[2] +
                std::conj(b.c4) * v[3])
            .real();
    };
    return {form(ar), form(ap), form(az)};
}

double probability_density(const EigenState& s, double rho, double z, const FieldOptions& opt) {
    return charge_density(s, rho, z, opt);  // P = q / e, charge carried in e units
}

FieldSample field_sample(const EigenState& s, double rho, double z, const FieldOptions& opt) {
    FieldSample f{};
    f.rho = rho;
    f.z = z;
    f.region = classify_point(s.geometry, rho, z);
    f.charge = charge_density(s, rho, z, opt);
    const auto j = current_density(s, rho, z, opt);
    f.j_rho = j[0];
    f.j_phi = j[1];
    f.j_z = j[2];
    f.probability = f.charge;
    return f;
}

double normalization(const EigenState& s, const QuadratureConfig& quad_cfg) {
    const int l = s.qnums.l_azimuthal;
    const double denom = radial::j_norm_quad(l, s.zeta, s.geometry.radius_R, quad_cfg).value +
                         s.kappa * s.kappa *
                             radial::k_norm_quad(l, s.xi, s.geometry.radius_R, quad_cfg).value;
    return 1.0 / (2.0 * std::numbers::pi * s.geometry.half_height_d * denom);
}

}  // namespace cavspin
