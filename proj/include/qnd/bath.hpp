// bath.hpp — Ohmic squeezed-thermal-bath dephasing kernels eta(t) and
// gamma(t), in closed form and via an independent quadrature oracle.
// Units: hbar = k_B = 1 throughout.

#pragma once

#include "qnd/quadrature.hpp"

namespace qnd::bath {

// The closed-form gamma(t) exists only in the T = 0 and high-T limits; the
// caller selects the regime explicitly so the formula switch is never silent.
enum class Regime { zero_temperature, high_temperature };

// Ohmic squeezed-thermal bath with spectral density
//   I(w) = (gamma0 / pi) w exp(-w / omega_c),
// squeezing magnitude r (frequency-independent) and squeezing phase
// Phi(w) = a w.
struct BathParams {
    double gamma0 = 0.0;       // dimensionless coupling strength
    double omega_c = 1.0;      // cutoff frequency (inverse time)
    double temperature = 0.0;  // T, same units as omega_c
    double r = 0.0;            // bath squeezing magnitude
    double a = 0.0;            // bath squeezing phase slope (time)
    Regime regime = Regime::zero_temperature;

    // Enforces gamma0 >= 0, omega_c > 0, T >= 0, a >= 0 and the
    // regime <-> temperature correspondence (zero_temperature iff T = 0).
    void validate() const;

    static BathParams zero_t(double gamma0, double omega_c, double r = 0.0, double a = 0.0);
    static BathParams high_t(double gamma0, double omega_c, double temperature,
                             double r = 0.0, double a = 0.0);
    // Picks the regime tag from T (0 -> zero_temperature, else high_temperature).
    static BathParams from_temperature(double gamma0, double omega_c, double temperature,
                                       double r = 0.0, double a = 0.0);
};

struct KernelPair {
    double eta = 0.0;
    double gamma = 0.0;
};

// Closed-form drift kernel eta(t) = -(gamma0/pi) arctan(omega_c t).
// Independent of T, r, a. Requires t >= 0.
double eta_closed(const BathParams& bath, double t);

// Closed-form decoherence kernel gamma(t), using the zero-temperature or
// high-temperature expression according to bath.regime. Both expressions are
// valid only for t > 2a; violating that is a DomainError.
double gamma_closed(const BathParams& bath, double t);

// Both kernels for propagation at time t. t = 0 is special-cased to the exact
// values eta = gamma = 0 (the defining integrals vanish identically there,
// while the closed forms require t > 2a).
KernelPair kernels_for_time(const BathParams& bath, double t);

// Quadrature oracles: direct adaptive integration of the continuum forms
//   eta(t)   = -Int_0^inf dw (I(w)/w^2) sin(w t)
//   gamma(t) = 1/2 Int_0^inf dw (I(w)/w^2) coth(w/2T)
//              |(e^{iwt}-1) cosh r + (e^{-iwt}-1) sinh r e^{2iaw}|^2
// with coth -> 1 at T = 0. The upper limit is 40 omega_c, where the
// exponential cutoff is below 5e-18.
double eta_quadrature(const BathParams& bath, double t,
                      const quadrature::Options& opts = {});
double gamma_quadrature(const BathParams& bath, double t,
                        const quadrature::Options& opts = {});

} // namespace qnd::bath
