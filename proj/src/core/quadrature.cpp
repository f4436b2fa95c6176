#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace cavspin {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double integral;   // K15
    double error;      // |K15 - G7|
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double result_k = kWgk[7] * fc;
    double result_g = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        result_k += kWgk[j] * fsum;
        if (j % 2 == 1) result_g += kWg[j / 2] * fsum;
    }
    return {result_k * h, std::abs((result_k - result_g) * h)};
}

struct Accumulator {
    double value = 0.0;
    double error = 0.0;
    long panels = 0;
};

void adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth,
           const QuadratureConfig& cfg, Accumulator& acc) {
    const Panel p = gk15(f, a, b);
    ++acc.panels;
    const double width = b - a;
    if (p.error <= tol || width <= std::abs(a) * 1e-15 + 1e-300) {
        acc.value += p.integral;
        acc.error += p.error;
        return;
    }
    if (depth >= cfg.max_depth)
        throw ConvergenceError("integrate: max_depth=" + std::to_string(cfg.max_depth) +
                                   " reached on [" + std::to_string(a) + ", " + std::to_string(b) + "]",
                               acc.value + p.integral, acc.error + p.error);
    const double c = 0.5 * (a + b);
    adapt(f, a, c, 0.5 * tol, depth + 1, cfg, acc);
    adapt(f, c, b, 0.5 * tol, depth + 1, cfg, acc);
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("QuadratureConfig tolerances must be > 0");
    if (max_depth < 10) throw std::invalid_argument("QuadratureConfig.max_depth must be >= 10");
    if (!(tail_cutoff_factor >= 20.0))
        throw std::invalid_argument("QuadratureConfig.tail_cutoff_factor must be >= 20");
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
    if (a == b) return {0.0, 0.0};
    // Scale the global tolerance from a first whole-interval estimate.
    const Panel first = gk15(f, a, b);
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(first.integral));
    Accumulator acc;
    adapt(f, a, b, tol, 0, cfg, acc);
    return {acc.value, acc.error};
}

QuadratureResult integrate_tail(const std::function<double(double)>& f, double a,
                                double decay_rate, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(a)) throw std::invalid_argument("integrate_tail: a must be finite");
    if (!(decay_rate > 0.0)) throw std::invalid_argument("integrate_tail: decay_rate must be > 0");
    const double span = cfg.tail_cutoff_factor / decay_rate;
    const double b = a + span;
    // Envelope amplitude from samples near the start; the poly(x) slack gets
    // half the e-foldings before we call the promise broken.
    double envelope = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double s = a + i / decay_rate;
        envelope = std::max(envelope, std::abs(f(s)) * std::exp(static_cast<double>(i)));
    }
    const double f_cut = std::abs(f(b));
    if (f_cut > envelope * std::exp(-0.5 * cfg.tail_cutoff_factor) && f_cut > cfg.abs_tol)
        throw TailBoundError("integrate_tail: integrand at cutoff x=" + std::to_string(b) +
                             " exceeds the promised exp(-" + std::to_string(decay_rate) +
                             "*x) envelope");
    QuadratureResult r = integrate(f, a, b, cfg);
    // Discarded remainder: |f| <= f(b) * exp(-decay_rate (x-b)) beyond the cutoff.
    r.error_estimate += f_cut / decay_rate;
    return r;
}

}  // namespace cavspin
