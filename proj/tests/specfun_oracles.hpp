#pragma once

// Test-only reference implementations of the cylinder functions, independent
// of the library's evaluation path: long-double ascending series for J_l and
// a fixed-step long-double Simpson rule on the exp(-x cosh t) cosh(l t)
// representation for K_l. Used to pin expected values and to locate roots by
// bisection without touching the code under test.

namespace oracles {

long double j_series(int l, long double x);
long double k_integral(int l, long double x);

// Bisection root of f on [lo, hi] to absolute tolerance tol.
template <typename F>
long double bisect(F f, long double lo, long double hi, long double tol) {
    long double flo = f(lo);
    for (int i = 0; i < 400 && hi - lo > tol; ++i) {
        const long double mid = 0.5L * (lo + hi);
        const long double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5L * (lo + hi);
}

// First positive zero of J_0, from the series oracle.
long double j0_first_zero();

// Radial location (in units of 1/zeta) of the peak of J0(x) J1(x):
// root of J0^2 - J1^2 - J0 J1 / x.
long double jphi_peak_x();

}  // namespace oracles
