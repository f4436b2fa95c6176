#include "solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bessel.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "radial.hpp"

namespace cavspin {

void SolverConfig::validate() const {
    if (scan_points < 100) throw std::invalid_argument("SolverConfig.scan_points must be >= 100");
    if (!(root_rel_tol > 0.0) || root_rel_tol > 1e-6)
        throw std::invalid_argument("SolverConfig.root_rel_tol must be in (0, 1e-6]");
    if (max_iterations < 1) throw std::invalid_argument("SolverConfig.max_iterations must be >= 1");
}

double axial_wavenumber(const CavityGeometry& g, int m_axial) {
    g.validate();
    if (m_axial < 1 || m_axial % 2 == 0)
        throw std::invalid_argument("m_axial must be odd and >= 1, got " + std::to_string(m_axial));
    return m_axial * std::numbers::pi / (2.0 * g.half_height_d);
}

BoundWindow bound_window(const CavityGeometry& g, int m_axial) {
    const auto& c = constants();
    const double hck = c.hbar_c * axial_wavenumber(g, m_axial);
    const double mc2 = c.electron_rest_energy;
    const double eps_min = hck * hck / (std::sqrt(mc2 * mc2 + hck * hck) + mc2);
    return {eps_min, g.barrier_U + eps_min};
}

WaveNumbers wave_numbers(const CavityGeometry& g, int m_axial, double epsilon) {
    const auto& c = constants();
    const double k = axial_wavenumber(g, m_axial);
    const double hck = c.hbar_c * k;
    const double mc2 = c.electron_rest_energy;
    // Rounding slack: the window edges themselves land within a few ulps of
    // zero, so only genuinely negative squares are rejected.
    const double slack = 1e-9 * hck * hck;
    const double zeta_sq = epsilon * (2.0 * mc2 + epsilon) - hck * hck;
    if (zeta_sq < -slack)
        throw std::domain_error("wave_numbers: epsilon < eps_min (interior wave number squared "
                                "negative), epsilon=" + std::to_string(epsilon));
    const double du = epsilon - g.barrier_U;
    const double xi_sq = hck * hck - du * (2.0 * mc2 + du);
    if (xi_sq < -slack)
        throw std::domain_error("wave_numbers: epsilon > eps_max (exterior decay constant squared "
                                "negative), epsilon=" + std::to_string(epsilon));
    return {std::sqrt(std::max(zeta_sq, 0.0)) / c.hbar_c, std::sqrt(std::max(xi_sq, 0.0)) / c.hbar_c,
            k};
}

double boundary_residual(const CavityGeometry& g, int l, int m_axial, double epsilon,
                         bool use_exact_eta) {
    if (l < 0) throw std::invalid_argument("l must be >= 0");
    const WaveNumbers wn = wave_numbers(g, m_axial, epsilon);
    const double r = g.radius_R;
    double eta_i = 1.0, eta_ii = 1.0;
    if (use_exact_eta) {
        const double two_mc2 = 2.0 * constants().electron_rest_energy;
        eta_i = 1.0 / (two_mc2 + epsilon);
        eta_ii = 1.0 / (two_mc2 + epsilon - g.barrier_U);
    }
    const double t1 = eta_i * wn.zeta * bessel_j_deriv(l, wn.zeta * r) * bessel_k(l, wn.xi * r);
    const double t2 = eta_ii * wn.xi * bessel_k_deriv(l, wn.xi * r) * bessel_j(l, wn.zeta * r);
    const double scale = std::max(std::abs(t1), std::abs(t2));
    if (scale == 0.0) return 0.0;
    return (t1 - t2) / scale;
}

std::vector<std::pair<double, double>> scan_residuals(const CavityGeometry& g, int l, int m_axial,
                                                      int scan_points, bool use_exact_eta) {
    if (scan_points < 2) throw std::invalid_argument("scan_points must be >= 2");
    const BoundWindow w = bound_window(g, m_axial);
    const double width = w.eps_max - w.eps_min;
    std::vector<std::pair<double, double>> out;
    out.reserve(scan_points);
    for (int i = 0; i < scan_points; ++i) {
        const double eps = w.eps_min + width * (i + 0.5) / scan_points;
        out.emplace_back(eps, boundary_residual(g, l, m_axial, eps, use_exact_eta));
    }
    return out;
}

namespace {

double bisect_root(const CavityGeometry& g, int l, int m, double lo, double hi, double g_lo,
                   const SolverConfig& cfg) {
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < cfg.max_iterations; ++it) {
        mid = 0.5 * (lo + hi);
        if (hi - lo <= cfg.root_rel_tol * mid) return mid;
        const double g_mid = boundary_residual(g, l, m, mid, cfg.use_exact_eta);
        if (g_mid == 0.0) return mid;
        if ((g_lo < 0.0) == (g_mid < 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    throw ConvergenceError("solve_eigenstate: bisection did not reach root_rel_tol within " +
                               std::to_string(cfg.max_iterations) + " iterations",
                           mid, hi - lo);
}

}  // namespace

EigenState solve_eigenstate(const CavityGeometry& g, const QuantumNumbers& q,
                            const SolverConfig& cfg, const QuadratureConfig& quad_cfg) {
    g.validate();
    q.validate();
    cfg.validate();
    quad_cfg.validate();

    const auto scan = scan_residuals(g, q.l_azimuthal, q.m_axial, cfg.scan_points, cfg.use_exact_eta);
    std::vector<std::pair<double, double>> brackets;  // (lo, hi) with sign change
    for (size_t i = 0; i + 1 < scan.size(); ++i) {
        const double ga = scan[i].second, gb = scan[i + 1].second;
        if (ga == 0.0) {
            brackets.emplace_back(scan[i].first, scan[i].first);
        } else if ((ga < 0.0) != (gb < 0.0)) {
            brackets.emplace_back(scan[i].first, scan[i + 1].first);
        }
    }
    if (brackets.empty()) {
        const BoundWindow w = bound_window(g, q.m_axial);
        throw NoBoundStateError("no bound state in window (" + std::to_string(w.eps_min * 1e3) +
                                ", " + std::to_string(w.eps_max * 1e3) + ") meV for l=" +
                                std::to_string(q.l_azimuthal) + ", m=" + std::to_string(q.m_axial));
    }
    if (q.n_radial > static_cast<int>(brackets.size()))
        throw NoSuchRootError("n_radial=" + std::to_string(q.n_radial) + " exceeds the " +
                                  std::to_string(brackets.size()) + " radial root(s) in the window",
                              static_cast<int>(brackets.size()));

    const auto [blo, bhi] = brackets[q.n_radial - 1];
    double eps;
    if (blo == bhi) {
        eps = blo;
    } else {
        eps = bisect_root(g, q.l_azimuthal, q.m_axial, blo, bhi,
                          boundary_residual(g, q.l_azimuthal, q.m_axial, blo, cfg.use_exact_eta), cfg);
    }

    const WaveNumbers wn = wave_numbers(g, q.m_axial, eps);
    const int l = q.l_azimuthal;
    const double kappa = bessel_j(l, wn.zeta * g.radius_R) / bessel_k(l, wn.xi * g.radius_R);

    // Normalization, both routes.
    const double norm_i = radial::j_norm_quad(l, wn.zeta, g.radius_R, quad_cfg).value;
    const double norm_ii = radial::k_norm_quad(l, wn.xi, g.radius_R, quad_cfg).value;
    const double denom_quad = norm_i + kappa * kappa * norm_ii;
    const double denom_closed = radial::j_norm_closed(l, wn.zeta, g.radius_R) +
                                kappa * kappa * radial::k_norm_closed(l, wn.xi, g.radius_R);
    if (std::abs(denom_quad - denom_closed) > 1e-9 * std::abs(denom_closed))
        throw ConvergenceError("solve_eigenstate: quadrature and closed-form normalization "
                               "disagree beyond 1e-9",
                               denom_quad, std::abs(denom_quad - denom_closed));
    const double n_squared = 1.0 / (2.0 * std::numbers::pi * g.half_height_d * denom_quad);

    EigenState s{};
    s.geometry = g;
    s.qnums = q;
    s.epsilon = eps;
    s.k_axial = wn.k_axial;
    s.zeta = wn.zeta;
    s.xi = wn.xi;
    s.kappa = kappa;
    s.n_squared = n_squared;
    s.boundary_residual = boundary_residual(g, l, q.m_axial, eps, cfg.use_exact_eta);
    return s;
}

}  // namespace cavspin
