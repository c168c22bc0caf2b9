// quadrature.hpp — adaptive Gauss-Kronrod integration on a finite interval.
// Serves as the ground-truth route for the closed-form bath kernels, so it is
// deliberately self-contained and deterministic.

#pragma once

#include <functional>

namespace qnd::quadrature {

struct Options {
    double abs_tol = 1e-10;
    int max_intervals = 4000;   // subdivision budget
    int initial_panels = 32;    // uniform pre-split before adapting
};

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
};

// Adaptive 15-point Kronrod / 7-point Gauss bisection, worst-interval-first.
// Endpoints are never evaluated. Throws NumericalError if the subdivision
// budget is exhausted before reaching abs_tol, carrying the achieved
// error estimate in the message.
Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Options& opts = {});

} // namespace qnd::quadrature
