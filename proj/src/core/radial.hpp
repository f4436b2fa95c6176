#pragma once

#include "quadrature.hpp"

// Radial integrals of the cylinder-function profiles, each available on two
// independent routes: adaptive quadrature of the integrand and a closed form
// obtained by differentiating Bessel products. The closed forms, specialized
// to l = 0,
//   int_0^X  x J0^2 dx        = X^2/2 (J0^2 + J1^2)
//   int_X^inf x K0^2 dx       = X^2/2 (K1^2 - K0^2)
//   int_0^X  x^2 J0 J1 dx     = X^2 J1^2 / 2
//   int_X^inf x^2 K0 K1 dx    = X^2 K1^2 / 2
// are the reference spine every quadrature result is checked against.

namespace cavspin::radial {

// int_0^R J_l(zeta rho)^2 rho drho
double j_norm_closed(int l, double zeta, double radius);
QuadratureResult j_norm_quad(int l, double zeta, double radius, const QuadratureConfig& cfg);

// int_R^inf K_l(xi rho)^2 rho drho
double k_norm_closed(int l, double xi, double radius);
QuadratureResult k_norm_quad(int l, double xi, double radius, const QuadratureConfig& cfg);

// int_0^R J_l(zeta rho) [zeta J_l'(zeta rho) - (l/rho) J_l(zeta rho)] rho^2 drho
// Signed: negative for the states of interest. The l = 0 case reduces to
// -int zeta J0 J1 rho^2 drho.
double j_current_moment_closed(int l, double zeta, double radius);
QuadratureResult j_current_moment_quad(int l, double zeta, double radius,
                                       const QuadratureConfig& cfg);

// int_R^inf K_l(xi rho) [xi K_l'(xi rho) - (l/rho) K_l(xi rho)] rho^2 drho
double k_current_moment_closed(int l, double xi, double radius);
QuadratureResult k_current_moment_quad(int l, double xi, double radius,
                                       const QuadratureConfig& cfg);

}  // namespace cavspin::radial
