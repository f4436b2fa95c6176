#include "bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace cavspin {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_order_and_config(int l, const SpecFunConfig& cfg) {
    if (l < 0) throw std::domain_error("bessel: order l must be >= 0, got " + std::to_string(l));
    if (!(cfg.target_rel_error > 0.0) || cfg.target_rel_error > 1e-10)
        throw std::invalid_argument("SpecFunConfig.target_rel_error must be in (0, 1e-10]");
    if (cfg.series_term_cap < 50)
        throw std::invalid_argument("SpecFunConfig.series_term_cap must be >= 50");
}

// Ascending series J_l(x) = sum_k (-1)^k (x/2)^(l+2k) / (k! (l+k)!).
// Cancellation-free for x <= max(6, l); terms alternate and the largest one
// stays within ~1e2 of the result there.
double bessel_j_series(int l, double x, const SpecFunConfig& cfg) {
    const double half_x = 0.5 * x;
    double first;  // (x/2)^l / l!
    if (l <= 24) {
        first = 1.0;
        for (int i = 1; i <= l; ++i) first *= half_x / static_cast<double>(i);
    } else {
        first = std::exp(static_cast<double>(l) * std::log(half_x) - std::lgamma(l + 1.0));
    }
    if (first == 0.0) return 0.0;  // deep underflow at tiny x, large l
    const double q = half_x * half_x;
    double term = first;
    double sum = first;
    for (int k = 1; k <= cfg.series_term_cap; ++k) {
        term *= -q / (static_cast<double>(k) * static_cast<double>(k + l));
        sum += term;
        if (std::abs(term) <= 0.05 * cfg.target_rel_error * std::abs(sum) && k > 2) return sum;
    }
    throw ConvergenceError("bessel_j series did not converge at l=" + std::to_string(l) +
                               ", x=" + std::to_string(x),
                           sum, std::abs(term));
}

// Trapezoid rule on [0, pi] for (1/pi) int cos(l t - x sin t) dt.
double bessel_j_integral(int l, double x) {
    const int n = static_cast<int>(std::ceil(0.5 * (x + l))) + 27;
    const double h = kPi / n;
    // endpoint terms: cos(0) = 1 and cos(l pi) = +/-1
    double sum = 0.5 * (1.0 + ((l % 2 == 0) ? 1.0 : -1.0));
    for (int j = 1; j < n; ++j) {
        const double t = j * h;
        sum += std::cos(l * t - x * std::sin(t));
    }
    return sum * h / kPi;
}

// log(cosh(y)) without overflow.
double log_cosh(double y) {
    y = std::abs(y);
    if (y > 20.0) return y - 0.6931471805599453 + std::log1p(std::exp(-2.0 * y));
    return std::log(std::cosh(y));
}

// Integrand exponent of the K_l representation at abscissa t.
inline double k_exponent(int l, double x, double t) { return -x * std::cosh(t) + log_cosh(l * t); }

// Trapezoid sum over t = 0, h, 2h, ... with dynamic truncation. The integrand
// is positive and eventually decays like exp(-(x/2) e^t), so we stop once
// terms fall 25 orders below the running peak (always past the maximum at
// t* ~ asinh(l/x)).
double k_trapezoid(int l, double x, double h) {
    const double t_peak = std::asinh(static_cast<double>(l) / x);
    double sum = 0.5 * std::exp(k_exponent(l, x, 0.0));
    double peak = sum;
    const double t_max = 1480.0;  // exp(-x cosh t) underflows long before this for any normal x
    for (double t = h; t < t_max; t += h) {
        const double e = k_exponent(l, x, t);
        if (e > 709.0)
            throw SpecFunOverflowError("bessel_k overflow at l=" + std::to_string(l) +
                                       ", x=" + std::to_string(x));
        const double f = std::exp(e);
        sum += f;
        if (f > peak) peak = f;
        if (t > t_peak && f < 1e-25 * peak) break;
    }
    return sum * h;
}

double bessel_k_impl(int l, double x, const SpecFunConfig& cfg) {
    // Leading-order overflow screen: K_l(x) ~ (l-1)!/2 (2/x)^l for small x.
    if (l >= 1 && x < 1.0) {
        const double log_lead = std::lgamma(static_cast<double>(l)) - 0.6931471805599453 +
                                l * std::log(2.0 / x);
        if (log_lead > 709.0)
            throw SpecFunOverflowError("bessel_k overflow at l=" + std::to_string(l) +
                                       ", x=" + std::to_string(x));
    }
    double h = 0.5;
    double prev = k_trapezoid(l, x, h);
    for (int level = 0; level < 8; ++level) {
        h *= 0.5;
        const double cur = k_trapezoid(l, x, h);
        if (std::abs(cur - prev) <= 0.05 * cfg.target_rel_error * std::abs(cur) && level >= 1)
            return cur;
        prev = cur;
    }
    return prev;  // h = 1/128: discretization error ~ exp(-2 pi^2 / (2h)) << 1e-16 of scale
}

}  // namespace

const SpecFunConfig& default_specfun_config() {
    static const SpecFunConfig cfg{};
    return cfg;
}

double bessel_j(int l, double x, const SpecFunConfig& cfg) {
    check_order_and_config(l, cfg);
    if (!std::isfinite(x) || x < 0.0)
        throw std::domain_error("bessel_j: x must be finite and >= 0, got " + std::to_string(x));
    if (x == 0.0) return l == 0 ? 1.0 : 0.0;
    if (x <= 6.0 || x <= static_cast<double>(l)) return bessel_j_series(l, x, cfg);
    return bessel_j_integral(l, x);
}

double bessel_k(int l, double x, const SpecFunConfig& cfg) {
    check_order_and_config(l, cfg);
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("bessel_k: x must be finite and > 0, got " + std::to_string(x));
    return bessel_k_impl(l, x, cfg);
}

double bessel_j_deriv(int l, double x, const SpecFunConfig& cfg) {
    if (l == 0) return -bessel_j(1, x, cfg);
    return 0.5 * (bessel_j(l - 1, x, cfg) - bessel_j(l + 1, x, cfg));
}

double bessel_k_deriv(int l, double x, const SpecFunConfig& cfg) {
    if (l == 0) return -bessel_k(1, x, cfg);
    return -0.5 * (bessel_k(l - 1, x, cfg) + bessel_k(l + 1, x, cfg));
}

}  // namespace cavspin
