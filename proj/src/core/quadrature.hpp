#pragma once

#include <functional>

// 1-D adaptive integration: Gauss-Kronrod 7/15 with interval bisection on
// finite ranges, plus a truncated variant for exponentially decaying tails.
// Every result carries a computed error estimate (sum of |K15 - G7| panel
// differences plus, for tails, the bound on the discarded remainder).

namespace cavspin {

struct QuadratureConfig {
    double rel_tol = 1e-11;
    double abs_tol = 1e-15;
    int max_depth = 60;
    double tail_cutoff_factor = 60.0;  // e-foldings kept before truncation

    void validate() const;
};

struct QuadratureResult {
    double value;
    double error_estimate;
};

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg = {});

// Integrates [a, a + tail_cutoff_factor / decay_rate] for integrands bounded
// by C * exp(-decay_rate * x) * poly(x). Throws TailBoundError when the
// integrand at the cutoff exceeds the decay envelope by more than the
// poly slack (half the e-foldings).
QuadratureResult integrate_tail(const std::function<double(double)>& f, double a,
                                double decay_rate, const QuadratureConfig& cfg = {});

}  // namespace cavspin
