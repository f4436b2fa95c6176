#pragma once

#include <stdexcept>
#include <string>

namespace cavspin {

// Physics-domain failures: the request was well-formed but the cavity does
// not support it.
struct NoBoundStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoSuchRootError : std::runtime_error {
    NoSuchRootError(const std::string& msg, int found) : std::runtime_error(msg), brackets_found(found) {}
    int brackets_found;
};

// Iteration/subdivision budget exhausted; carries the best value reached.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& msg, double best, double err)
        : std::runtime_error(msg), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

// integrate_tail: integrand did not decay as promised at the cutoff.
struct TailBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bessel_k result would exceed the representable range.
struct SpecFunOverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cavspin
