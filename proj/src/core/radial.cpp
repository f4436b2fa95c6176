#include "radial.hpp"

#include <cmath>

#include "bessel.hpp"

namespace cavspin::radial {

double j_norm_closed(int l, double zeta, double radius) {
    const double x = zeta * radius;
    const double j = bessel_j(l, x);
    const double jp = bessel_j_deriv(l, x);
    const double lfac = l > 0 ? 1.0 - static_cast<double>(l) * l / (x * x) : 1.0;
    return 0.5 * radius * radius * (jp * jp + lfac * j * j);
}

QuadratureResult j_norm_quad(int l, double zeta, double radius, const QuadratureConfig& cfg) {
    return integrate(
        [l, zeta](double rho) {
            const double j = bessel_j(l, zeta * rho);
            return j * j * rho;
        },
        0.0, radius, cfg);
}

double k_norm_closed(int l, double xi, double radius) {
    const double x = xi * radius;
    const double k = bessel_k(l, x);
    const double kp = bessel_k_deriv(l, x);
    return 0.5 * radius * radius * (kp * kp - (1.0 + static_cast<double>(l) * l / (x * x)) * k * k);
}

QuadratureResult k_norm_quad(int l, double xi, double radius, const QuadratureConfig& cfg) {
    return integrate_tail(
        [l, xi](double rho) {
            const double k = bessel_k(l, xi * rho);
            return k * k * rho;
        },
        radius, 2.0 * xi, cfg);
}

double j_current_moment_closed(int l, double zeta, double radius) {
    const double j = bessel_j(l, zeta * radius);
    return 0.5 * radius * radius * j * j - (l + 1.0) * j_norm_closed(l, zeta, radius);
}

QuadratureResult j_current_moment_quad(int l, double zeta, double radius,
                                       const QuadratureConfig& cfg) {
    return integrate(
        [l, zeta](double rho) {
            if (rho == 0.0) return 0.0;  // integrand -> 0; avoids l/rho
            const double x = zeta * rho;
            const double j = bessel_j(l, x);
            const double f4 = zeta * bessel_j_deriv(l, x) - l / rho * j;
            return j * f4 * rho * rho;
        },
        0.0, radius, cfg);
}

double k_current_moment_closed(int l, double xi, double radius) {
    const double k = bessel_k(l, xi * radius);
    return -0.5 * radius * radius * k * k - (l + 1.0) * k_norm_closed(l, xi, radius);
}

QuadratureResult k_current_moment_quad(int l, double xi, double radius,
                                       const QuadratureConfig& cfg) {
    return integrate_tail(
        [l, xi](double rho) {
            const double x = xi * rho;
            const double k = bessel_k(l, x);
            const double f4 = xi * bessel_k_deriv(l, x) - l / rho * k;
            return k * f4 * rho * rho;
        },
        radius, 2.0 * xi, cfg);
}

}  // namespace cavspin::radial
