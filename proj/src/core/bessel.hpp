#pragma once

// Cylinder functions J_l and K_l for integer order l >= 0 on the real axis,
// plus first derivatives via the standard recurrences. These are the radial
// solutions of the confined-electron eigenproblem: oscillatory J inside the
// cavity, decaying K outside.
//
// J_l is evaluated by the ascending power series where it is cancellation-free
// (x <= max(6, l)) and by trapezoidal quadrature of Bessel's integral
//   J_l(x) = (1/pi) int_0^pi cos(l t - x sin t) dt
// elsewhere. The integrand extends to an even periodic function, so the
// N-point trapezoid rule aliases only onto orders >= 2N - l; choosing
// 2N - l > x + 52 pushes the aliased terms below 1e-18.
//
// K_l is evaluated by trapezoidal refinement of
//   K_l(x) = int_0^inf exp(-x cosh t) cosh(l t) dt,
// an everywhere-positive integrand (no cancellation) that decays doubly
// exponentially; halving the step until two refinements agree gives a
// computed error bound.

namespace cavspin {

struct SpecFunConfig {
    double target_rel_error = 1e-13;  // must be in (0, 1e-10]
    int series_term_cap = 400;        // must be >= 50
};

const SpecFunConfig& default_specfun_config();

double bessel_j(int l, double x, const SpecFunConfig& cfg = default_specfun_config());
double bessel_k(int l, double x, const SpecFunConfig& cfg = default_specfun_config());

// (J_{l-1}(x) - J_{l+1}(x)) / 2, with J_{-1} = -J_1.
double bessel_j_deriv(int l, double x, const SpecFunConfig& cfg = default_specfun_config());

// -(K_{l-1}(x) + K_{l+1}(x)) / 2, with K_{-1} = K_1.
double bessel_k_deriv(int l, double x, const SpecFunConfig& cfg = default_specfun_config());

}  // namespace cavspin
