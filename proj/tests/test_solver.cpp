#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "core/bessel.hpp"
#include "core/errors.hpp"
#include "core/solver.hpp"
#include "specfun_oracles.hpp"

using namespace cavspin;

namespace {

// Reference cavity: R = 8 nm, d = 4 nm, U = 10 meV.
const CavityGeometry kRef{8.0, 4.0, 0.010};

// Frozen values from the arbitrary-precision oracle run (dense scan at 1e5
// points + bisection to 1e-35): ground state (1,0,1) of the reference cavity.
constexpr double kEps101 = 8.0634683368635948e-3;  // eV
constexpr double kZeta101 = 0.2396414307881092;    // nm^-1
constexpr double kXi101 = 0.45281388007722093;     // nm^-1
constexpr double kKappa101 = 15.936071896365403;
constexpr double kN2101 = 2.880653160709997e-3;    // nm^-3

QuantumNumbers qn(int n, int l, int m) {
    QuantumNumbers q;
    q.n_radial = n;
    q.l_azimuthal = l;
    q.m_axial = m;
    return q;
}

// Matching residual evaluated with the test-only oracle functions; fully
// independent of the library's Bessel path.
double oracle_residual(const CavityGeometry& g, int l, int m, double eps) {
    const WaveNumbers wn = wave_numbers(g, m, eps);  // algebra only
    const long double zr = wn.zeta * g.radius_R, xr = wn.xi * g.radius_R;
    const long double jp = l == 0 ? -oracles::j_series(1, zr)
                                  : 0.5L * (oracles::j_series(l - 1, zr) - oracles::j_series(l + 1, zr));
    const long double kp = l == 0 ? -oracles::k_integral(1, xr)
                                  : -0.5L * (oracles::k_integral(l - 1, xr) + oracles::k_integral(l + 1, xr));
    const long double t1 = wn.zeta * jp * oracles::k_integral(l, xr);
    const long double t2 = wn.xi * kp * oracles::j_series(l, zr);
    return static_cast<double>((t1 - t2) / std::max(std::fabs(t1), std::fabs(t2)));
}

}  // namespace

TEST_CASE("axial_wavenumber") {
    CHECK(axial_wavenumber(kRef, 1) == doctest::Approx(M_PI / 8.0).epsilon(1e-15));
    CHECK(axial_wavenumber(kRef, 3) == doctest::Approx(3.0 * M_PI / 8.0).epsilon(1e-15));
    CHECK(axial_wavenumber({8.0, 2.0, 0.010}, 1) == doctest::Approx(M_PI / 4.0).epsilon(1e-15));
    CHECK_THROWS_AS(axial_wavenumber(kRef, 2), std::invalid_argument);
    CHECK_THROWS_AS(axial_wavenumber(kRef, 0), std::invalid_argument);
    CHECK_THROWS_AS(axial_wavenumber(kRef, -1), std::invalid_argument);
}

TEST_CASE("bound_window: reference cavity") {
    const BoundWindow w = bound_window(kRef, 1);
    CHECK(w.eps_min == doctest::Approx(5.8754712535328e-3).epsilon(1e-12));
    CHECK(w.eps_max == doctest::Approx(15.8754712535328e-3).epsilon(1e-12));
    // relativistic correction to eps_min is below 1e-8 relative
    const double hck = 197.3269804 * M_PI / 8.0;
    const double nonrel = hck * hck / (2.0 * 510998.95);
    CHECK(std::abs(w.eps_min - nonrel) / w.eps_min < 1e-8);
    // window width is exactly U
    CHECK(w.eps_max - w.eps_min == doctest::Approx(kRef.barrier_U).epsilon(1e-12));
}

TEST_CASE("wave_numbers: reference values at the printed eigenvalue") {
    const WaveNumbers wn = wave_numbers(kRef, 1, 8.06e-3);
    CHECK(wn.zeta == doctest::Approx(0.2394514198282562).epsilon(1e-12));
    CHECK(wn.xi == doctest::Approx(0.45291438802627001).epsilon(1e-12));
    CHECK(wn.k_axial == doctest::Approx(M_PI / 8.0).epsilon(1e-15));
    // rounded published values: 2.40e8 and 4.53e8 m^-1
    CHECK(wn.zeta * 1e9 == doctest::Approx(2.40e8).epsilon(3e-3));
    CHECK(wn.xi * 1e9 == doctest::Approx(4.53e8).epsilon(3e-3));
}

TEST_CASE("wave_numbers: window edges") {
    const BoundWindow w = bound_window(kRef, 1);
    // at the lower edge zeta -> 0 (few-ulp slack keeps the edge usable)
    const WaveNumbers lo = wave_numbers(kRef, 1, w.eps_min);
    CHECK(std::abs(lo.zeta) < 1e-7);
    CHECK_THROWS_AS(wave_numbers(kRef, 1, w.eps_min * 0.9), std::domain_error);
    CHECK_THROWS_AS(wave_numbers(kRef, 1, w.eps_max * 1.1), std::domain_error);
    // the thrown messages name the failed inequality
    try {
        wave_numbers(kRef, 1, w.eps_min * 0.9);
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("eps_min") != std::string::npos);
    }
    try {
        wave_numbers(kRef, 1, w.eps_max * 1.1);
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("eps_max") != std::string::npos);
    }
}

TEST_CASE("boundary_residual: reference cavity structure") {
    // near-null at the published rounded eigenvalue
    CHECK(std::abs(boundary_residual(kRef, 0, 1, 8.06e-3)) < 5e-3);
    CHECK(boundary_residual(kRef, 0, 1, 8.06e-3) == doctest::Approx(0.0041434231).epsilon(1e-6));
    // bracket across [8.0, 8.2] meV
    const double g_lo = boundary_residual(kRef, 0, 1, 8.0e-3);
    const double g_hi = boundary_residual(kRef, 0, 1, 8.2e-3);
    CHECK(g_lo == doctest::Approx(0.072481922).epsilon(1e-6));
    CHECK(g_hi == doctest::Approx(-0.15458992).epsilon(1e-6));
    CHECK(g_lo * g_hi < 0.0);
    // near the lower window edge the xi J0 K1 term dominates
    const BoundWindow w = bound_window(kRef, 1);
    CHECK(boundary_residual(kRef, 0, 1, w.eps_min + 1e-9) > 0.9);
}

TEST_CASE("scan_residuals: bracket counts and open interval") {
    const auto scan = scan_residuals(kRef, 0, 1, 2000);
    REQUIRE(scan.size() == 2000);
    const BoundWindow w = bound_window(kRef, 1);
    CHECK(scan.front().first > w.eps_min);
    CHECK(scan.back().first < w.eps_max);
    int sign_changes = 0;
    for (size_t i = 0; i + 1 < scan.size(); ++i)
        if ((scan[i].second < 0) != (scan[i + 1].second < 0)) ++sign_changes;
    // two radial roots: the deep 8.06 meV state and the weakly bound
    // 15.71 meV state living above the barrier but below the window edge
    CHECK(sign_changes == 2);

    const auto scan100 = scan_residuals({8.0, 4.0, 0.100}, 0, 1, 2000);
    int changes100 = 0;
    for (size_t i = 0; i + 1 < scan100.size(); ++i)
        if ((scan100[i].second < 0) != (scan100[i + 1].second < 0)) ++changes100;
    CHECK(changes100 == 4);
}

TEST_CASE("solve_eigenstate: reference ground state against the frozen oracle") {
    const EigenState s = solve_eigenstate(kRef, qn(1, 0, 1));
    CHECK(s.epsilon == doctest::Approx(kEps101).epsilon(1e-10));
    CHECK(s.zeta == doctest::Approx(kZeta101).epsilon(1e-10));
    CHECK(s.xi == doctest::Approx(kXi101).epsilon(1e-10));
    CHECK(s.kappa == doctest::Approx(kKappa101).epsilon(1e-9));
    CHECK(s.n_squared == doctest::Approx(kN2101).epsilon(1e-9));
    CHECK(std::abs(s.boundary_residual) <= 1e-10);
    CHECK(s.k_axial == doctest::Approx(M_PI / 8.0).epsilon(1e-15));
    CHECK(s.zeta > 0.0);
    CHECK(s.xi > 0.0);
    CHECK(s.kappa > 0.0);
    CHECK(s.n_squared > 0.0);
    // published rounded values
    CHECK(s.epsilon * 1e3 == doctest::Approx(8.06).epsilon(1e-2));
    CHECK(s.kappa == doctest::Approx(15.9).epsilon(5e-3));

    // large-component continuity defines kappa
    const double j = bessel_j(0, s.zeta * kRef.radius_R);
    const double k = bessel_k(0, s.xi * kRef.radius_R);
    CHECK(std::abs(j - s.kappa * k) <= 1e-12 * std::abs(j));
}

TEST_CASE("solve_eigenstate: root confirmed by the independent oracle functions") {
    const EigenState s = solve_eigenstate(kRef, qn(1, 0, 1));
    CHECK(std::abs(oracle_residual(kRef, 0, 1, s.epsilon)) < 1e-8);
    CHECK(oracle_residual(kRef, 0, 1, s.epsilon - 1e-5) * oracle_residual(kRef, 0, 1, s.epsilon + 1e-5) <
          0.0);
}

TEST_CASE("solve_eigenstate: deeper well and higher radial roots") {
    const CavityGeometry deep{8.0, 4.0, 0.100};
    const EigenState s1 = solve_eigenstate(deep, qn(1, 0, 1));
    CHECK(s1.epsilon == doctest::Approx(8.8404894456465003e-3).epsilon(1e-10));
    const EigenState s2 = solve_eigenstate(deep, qn(2, 0, 1));
    CHECK(s2.epsilon == doctest::Approx(21.446694994112268e-3).epsilon(1e-10));
    CHECK(s2.kappa < 0.0);  // interior node: J0(zeta R) < 0

    // the shallow reference well also holds a second, weakly bound root
    const EigenState w2 = solve_eigenstate(kRef, qn(2, 0, 1));
    CHECK(w2.epsilon == doctest::Approx(15.706357878362252e-3).epsilon(1e-10));
    CHECK(w2.epsilon > kRef.barrier_U);  // above the barrier, below the window edge
    CHECK(w2.xi > 0.0);
}

TEST_CASE("solve_eigenstate: error paths") {
    CHECK_THROWS_AS(solve_eigenstate(kRef, qn(3, 0, 1)), NoSuchRootError);
    try {
        solve_eigenstate(kRef, qn(3, 0, 1));
    } catch (const NoSuchRootError& e) {
        CHECK(e.brackets_found == 2);
    }
    // vanishing well: no bound state
    CHECK_THROWS_AS(solve_eigenstate({8.0, 4.0, 1e-6}, qn(1, 0, 1)), NoBoundStateError);
    CHECK_THROWS_AS(solve_eigenstate({-8.0, 4.0, 0.01}, qn(1, 0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(solve_eigenstate(kRef, qn(1, 0, 2)), std::invalid_argument);
    SolverConfig bad;
    bad.scan_points = 10;
    CHECK_THROWS_AS(solve_eigenstate(kRef, qn(1, 0, 1), bad), std::invalid_argument);
    bad = SolverConfig{};
    bad.root_rel_tol = 1e-3;
    CHECK_THROWS_AS(solve_eigenstate(kRef, qn(1, 0, 1), bad), std::invalid_argument);
}

TEST_CASE("solve_eigenstate: general l matching") {
    const EigenState s = solve_eigenstate(kRef, qn(1, 1, 1));
    CHECK(s.epsilon == doctest::Approx(11.277668055177056e-3).epsilon(1e-10));
    CHECK(s.kappa == doctest::Approx(6.37860709689369).epsilon(1e-9));
    CHECK(std::abs(s.boundary_residual) <= 1e-10);
    CHECK(std::abs(oracle_residual(kRef, 1, 1, s.epsilon)) < 1e-8);

    // full fourth-component matching (with the -l/R pieces) holds at the
    // root: the -l/R terms cancel once the first condition fixes kappa
    const double r = kRef.radius_R;
    const double f4_i = s.zeta * bessel_j_deriv(1, s.zeta * r) - (1.0 / r) * bessel_j(1, s.zeta * r);
    const double f4_ii =
        s.kappa * (s.xi * bessel_k_deriv(1, s.xi * r) - (1.0 / r) * bessel_k(1, s.xi * r));
    CHECK(std::abs(f4_i - f4_ii) <= 1e-9 * std::max(std::abs(f4_i), std::abs(f4_ii)));

    const EigenState deep_l1 = solve_eigenstate({8.0, 4.0, 0.100}, qn(1, 1, 1));
    CHECK(deep_l1.epsilon == doctest::Approx(13.395258341680073e-3).epsilon(1e-10));
}

TEST_CASE("solve_eigenstate: ground state energy decreases with radius") {
    const EigenState r6 = solve_eigenstate({6.0, 4.0, 0.010}, qn(1, 0, 1));
    const EigenState r8 = solve_eigenstate({8.0, 4.0, 0.010}, qn(1, 0, 1));
    const EigenState r10 = solve_eigenstate({10.0, 4.0, 0.010}, qn(1, 0, 1));
    CHECK(r6.epsilon == doctest::Approx(9.24258533254393e-3).epsilon(1e-10));
    CHECK(r10.epsilon == doctest::Approx(7.40357818639705e-3).epsilon(1e-10));
    CHECK(r6.epsilon > r8.epsilon);
    CHECK(r8.epsilon > r10.epsilon);
}

TEST_CASE("solve_eigenstate: non-relativistic matching shifts the root below 1e-8") {
    // Same matching condition with zeta^2 = 2 mc^2 eps / (hbar c)^2 and
    // xi^2 = (2 mc^2 (U - eps) + (hbar c k)^2) / (hbar c)^2: the meV-scale
    // spectrum is insensitive to the relativistic quadratic terms.
    const double mc2 = 510998.95, hbarc = 197.3269804;
    const double hck = hbarc * M_PI / 8.0;
    auto g_nonrel = [&](double eps) {
        const double zeta = std::sqrt(2.0 * mc2 * eps - hck * hck) / hbarc;
        const double xi = std::sqrt(hck * hck + 2.0 * mc2 * (kRef.barrier_U - eps)) / hbarc;
        const double t1 = zeta * bessel_j_deriv(0, zeta * 8.0) * bessel_k(0, xi * 8.0);
        const double t2 = xi * bessel_k_deriv(0, xi * 8.0) * bessel_j(0, zeta * 8.0);
        return (t1 - t2) / std::max(std::abs(t1), std::abs(t2));
    };
    double lo = 8.0e-3, hi = 8.2e-3;
    double g_lo = g_nonrel(lo);
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g_nonrel(mid);
        if ((gm < 0) == (g_lo < 0)) {
            lo = mid;
            g_lo = gm;
        } else {
            hi = mid;
        }
    }
    const double eps_nr = 0.5 * (lo + hi);
    const EigenState s = solve_eigenstate(kRef, qn(1, 0, 1));
    CHECK(std::abs(eps_nr - s.epsilon) / s.epsilon < 2e-8);
    CHECK(std::abs(eps_nr - s.epsilon) / s.epsilon ==
          doctest::Approx(7.5362688e-9).epsilon(0.05));
}

TEST_CASE("solve_eigenstate: exact-eta matching is a tiny, finite shift") {
    SolverConfig exact;
    exact.use_exact_eta = true;
    const EigenState s0 = solve_eigenstate(kRef, qn(1, 0, 1));
    const EigenState s1 = solve_eigenstate(kRef, qn(1, 0, 1), exact);
    CHECK(std::abs(s1.epsilon - s0.epsilon) / s0.epsilon < 1e-6);
    CHECK(std::abs(s1.boundary_residual) <= 1e-10);
}
