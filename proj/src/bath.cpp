#include "qnd/bath.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "qnd/errors.hpp"

namespace qnd::bath {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

// coth(x) for x > 0; the integrands only probe strictly positive arguments.
double coth(double x) {
    return 1.0 / std::tanh(x);
}

void check_time_window(const BathParams& bath, double t) {
    if (!(t > 2.0 * bath.a)) {
        std::ostringstream msg;
        msg << "gamma_closed: closed-form kernel is valid only for t > 2a "
            << "(t = " << t << ", 2a = " << 2.0 * bath.a << ")";
        throw DomainError(msg.str());
    }
}

} // namespace

void BathParams::validate() const {
    if (!(gamma0 >= 0.0)) throw ConfigError("BathParams: gamma0 must be >= 0");
    if (!(omega_c > 0.0)) throw ConfigError("BathParams: omega_c must be > 0");
    if (!(temperature >= 0.0)) throw ConfigError("BathParams: temperature must be >= 0");
    if (!(a >= 0.0)) throw ConfigError("BathParams: a must be >= 0");
    const bool is_zero = (regime == Regime::zero_temperature);
    if (is_zero != (temperature == 0.0)) {
        throw ConfigError("BathParams: regime tag inconsistent with temperature "
                          "(zero_temperature iff T = 0)");
    }
}

BathParams BathParams::zero_t(double gamma0, double omega_c, double r, double a) {
    BathParams b{gamma0, omega_c, 0.0, r, a, Regime::zero_temperature};
    b.validate();
    return b;
}

BathParams BathParams::high_t(double gamma0, double omega_c, double temperature,
                              double r, double a) {
    BathParams b{gamma0, omega_c, temperature, r, a, Regime::high_temperature};
    b.validate();
    return b;
}

BathParams BathParams::from_temperature(double gamma0, double omega_c, double temperature,
                                        double r, double a) {
    return temperature == 0.0 ? zero_t(gamma0, omega_c, r, a)
                              : high_t(gamma0, omega_c, temperature, r, a);
}

double eta_closed(const BathParams& bath, double t) {
    bath.validate();
    if (!(t >= 0.0)) throw DomainError("eta_closed: t must be >= 0");
    return -(bath.gamma0 / kPi) * std::atan(bath.omega_c * t);
}

double gamma_closed(const BathParams& bath, double t) {
    bath.validate();
    check_time_window(bath, t);

    const double g0 = bath.gamma0;
    const double wc = bath.omega_c;
    const double ch = std::cosh(2.0 * bath.r);
    const double sh = std::sinh(2.0 * bath.r);
    const double a = bath.a;

    if (bath.regime == Regime::zero_temperature) {
        const double term_th = (g0 / (2.0 * kPi)) * ch * std::log1p(wc * wc * t * t);
        const double num = 1.0 + 4.0 * wc * wc * (t - a) * (t - a);
        const double den = 1.0 + wc * wc * (t - 2.0 * a) * (t - 2.0 * a);
        const double term_sq = (g0 / (4.0 * kPi)) * sh * std::log(num / (den * den));
        const double term_a = (g0 / (4.0 * kPi)) * sh * std::log1p(4.0 * a * a * wc * wc);
        return term_th - term_sq - term_a;
    }

    const double pref = g0 * bath.temperature / (kPi * wc);
    const double term_th =
        pref * ch * (2.0 * wc * t * std::atan(wc * t) - std::log1p(wc * wc * t * t));
    const double x1 = 2.0 * wc * (t - a);
    const double x2 = wc * (t - 2.0 * a);
    const double x3 = 2.0 * a * wc;
    const double bracket = 2.0 * x1 * std::atan(x1) - 4.0 * x2 * std::atan(x2) +
                           2.0 * x3 * std::atan(x3) +
                           std::log((1.0 + x2 * x2) * (1.0 + x2 * x2) / (1.0 + x1 * x1)) -
                           std::log1p(x3 * x3);
    const double term_sq = 0.5 * pref * sh * bracket;
    return term_th - term_sq;
}

KernelPair kernels_for_time(const BathParams& bath, double t) {
    bath.validate();
    if (!(t >= 0.0)) throw DomainError("kernels_for_time: t must be >= 0");
    if (t == 0.0) return {0.0, 0.0};
    return {eta_closed(bath, t), gamma_closed(bath, t)};
}

double eta_quadrature(const BathParams& bath, double t, const quadrature::Options& opts) {
    bath.validate();
    if (!(t >= 0.0)) throw DomainError("eta_quadrature: t must be >= 0");
    const double g0 = bath.gamma0;
    const double wc = bath.omega_c;
    const auto integrand = [&](double w) {
        // (I(w)/w^2) sin(w t) = (gamma0/pi) e^{-w/wc} sin(w t)/w
        return (g0 / kPi) * std::exp(-w / wc) * std::sin(w * t) / w;
    };
    return -quadrature::integrate(integrand, 0.0, 40.0 * wc, opts).value;
}

double gamma_quadrature(const BathParams& bath, double t, const quadrature::Options& opts) {
    bath.validate();
    if (!(t >= 0.0)) throw DomainError("gamma_quadrature: t must be >= 0");
    const double g0 = bath.gamma0;
    const double wc = bath.omega_c;
    const double T = bath.temperature;
    const double ch = std::cosh(bath.r);
    const double sh = std::sinh(bath.r);
    const double a = bath.a;
    const auto integrand = [&](double w) {
        const std::complex<double> ep = std::polar(1.0, w * t) - 1.0;
        const std::complex<double> em = std::polar(1.0, -w * t) - 1.0;
        const std::complex<double> mix = ep * ch + em * sh * std::polar(1.0, 2.0 * a * w);
        const double thermal = (T == 0.0) ? 1.0 : coth(w / (2.0 * T));
        return 0.5 * (g0 / kPi) * std::exp(-w / wc) / w * thermal * std::norm(mix);
    };
    return quadrature::integrate(integrand, 0.0, 40.0 * wc, opts).value;
}

} // namespace qnd::bath
