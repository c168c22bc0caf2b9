// specfun.hpp — numerically stable special functions for the state generators
// and atomic overlaps: Hermite polynomials, terminating Gauss hypergeometric
// sums, log-gamma/beta, and Wigner small-d rotation matrix elements.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qnd::specfun {

// Capacity shared by the factorial table, Hermite recurrence, and the
// terminating 2F1 sums. Poisson weights at |alpha|^2 = 5 are below 1e-30
// past n = 60, so 128 leaves a wide margin.
inline constexpr std::size_t kNMax = 128;

// Table of ln(n!), built by cumulative summation so that
// values[n] - values[n-1] = ln(n) holds by construction.
class LogFactorialTable {
public:
    explicit LogFactorialTable(std::size_t n_max = kNMax);

    // ln(n!); throws CapacityError for n beyond the table.
    double operator()(std::size_t n) const;

    std::size_t n_max() const { return values_.size() - 1; }

    // Process-wide read-only instance sized at kNMax.
    static const LogFactorialTable& shared();

private:
    std::vector<double> values_;
};

// Physicists' Hermite polynomial H_n(z) via the three-term recurrence
// H_{n+1}(z) = 2 z H_n(z) - 2 n H_{n-1}(z). Throws CapacityError for n > kNMax.
std::complex<double> hermite(unsigned n, std::complex<double> z);

// A real number v = mantissa * 2^exponent2, used where intermediate results
// overflow double (factorial ratios, large-argument hypergeometric sums).
struct Scaled {
    double mantissa = 0.0;
    long exponent2 = 0;

    double to_double() const;   // may overflow to +-inf
    double log_abs() const;     // ln|v|; -inf for zero
};

// Hermite polynomial with the magnitude carried as a power-of-two scale,
// for m up to kNMax and arbitrarily large |z|.
Scaled hermite_scaled(unsigned n, std::complex<double> z,
                      std::complex<double>* unit_phase);

// Terminating Gauss hypergeometric function 2F1[-p, -m; c; x] as the exact
// finite sum over s = 0..min(p,m) of (-p)_s (-m)_s / (c)_s * x^s / s!.
// Symmetric in p and m bit-for-bit. Requires c > 0.
double hyp2f1_terminating(unsigned p, unsigned m, double c, double x);

// Same sum, with the result scaled to survive very large |x| (needed for the
// squeeze matrix elements at small squeeze magnitude).
Scaled hyp2f1_terminating_scaled(unsigned p, unsigned m, double c, double x);

// ln Gamma(x) for x > 0.
double ln_gamma(double x);

// Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b) for a, b > 0,
// assembled in log space.
double beta(double a, double b);

// Wigner small-d rotation matrix element
//   d^j_{np}(beta) = <j,n| exp(-i beta J_y) |j,p>,
// evaluated with the standard summation formula, log-factorial stabilized.
// j, n, p are half-integers (validated); |n| <= j, |p| <= j.
double wigner_d(double j, double n, double p, double beta);

} // namespace qnd::specfun
