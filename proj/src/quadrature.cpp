#include "qnd/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qnd/errors.hpp"

namespace qnd::quadrature {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (abscissae for the interval [-1, 1]; Gauss nodes sit at odd indices).
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

struct Interval {
    double lo, hi;
    double value;
    double error;
};

Interval gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    const double fc = f(mid);
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(mid - dx);
        const double f2 = f(mid + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    Interval out;
    out.lo = lo;
    out.hi = hi;
    out.value = resk * half;
    out.error = std::abs((resk - resg) * half);
    return out;
}

} // namespace

Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Options& opts) {
    if (!(hi > lo)) {
        if (hi == lo) return {0.0, 0.0, 0};
        throw DomainError("quadrature::integrate: upper limit below lower limit");
    }

    std::vector<Interval> heap;
    heap.reserve(static_cast<std::size_t>(opts.max_intervals) + 2);
    const auto by_error = [](const Interval& a, const Interval& b) {
        return a.error < b.error;
    };

    const int n0 = std::max(1, opts.initial_panels);
    const double w = (hi - lo) / n0;
    for (int i = 0; i < n0; ++i) {
        heap.push_back(gk15(f, lo + i * w, lo + (i + 1) * w));
        std::push_heap(heap.begin(), heap.end(), by_error);
    }

    auto total_error = [&heap]() {
        double e = 0.0;
        for (const auto& iv : heap) e += iv.error;
        return e;
    };

    double err = total_error();
    while (err > opts.abs_tol) {
        if (static_cast<int>(heap.size()) >= opts.max_intervals) {
            std::ostringstream msg;
            msg << "quadrature::integrate: subdivision budget of " << opts.max_intervals
                << " intervals exhausted; achieved error estimate " << err
                << " (target " << opts.abs_tol << ")";
            throw NumericalError(msg.str());
        }
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Interval worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Interval left = gk15(f, worst.lo, mid);
        const Interval right = gk15(f, mid, worst.hi);
        err += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), by_error);
        // Re-sum occasionally: the incremental estimate accumulates rounding.
        if (heap.size() % 256 == 0) err = total_error();
    }

    // Deterministic final gather: sum in interval order, compensated.
    std::sort(heap.begin(), heap.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    double sum = 0.0, comp = 0.0;
    for (const auto& iv : heap) {
        const double y = iv.value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return {sum, total_error(), static_cast<int>(heap.size())};
}

} // namespace qnd::quadrature
