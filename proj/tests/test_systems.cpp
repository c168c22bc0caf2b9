#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "qnd/errors.hpp"
#include "qnd/states.hpp"
#include "qnd/systems.hpp"

using namespace qnd;
using std::complex;

namespace {

const bath::BathParams kFigBath = bath::BathParams::zero_t(0.0025, 100.0, 2.0);

systems::ReducedDensityMatrix coherent_dm(double alpha2, std::size_t n) {
    return states::dm_from_coeffs(states::coherent_coeffs({std::sqrt(alpha2), 0.0}, n),
                                  systems::Basis::number);
}

} // namespace

TEST_CASE("system spec validation") {
    CHECK_THROWS_AS(systems::SystemSpec::harmonic(0.0), ConfigError);
    CHECK_THROWS_AS(systems::SystemSpec::anharmonic(1.0, -0.1), ConfigError);
    systems::SystemSpec bad = systems::SystemSpec::harmonic(1.0);
    bad.lambda = 0.5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("energies of the three systems") {
    const auto harm = systems::SystemSpec::harmonic(1.0);
    CHECK(systems::energy(harm, systems::Basis::number, 0) == 0.5);
    CHECK(systems::energy(harm, systems::Basis::number, 3) == 3.5);

    // 2 [omega (m + 1/4) + lambda m (m - 1/2)] at omega = 1, lambda = 0.02, m = 2
    const auto anh = systems::SystemSpec::anharmonic(1.0, 0.02);
    CHECK(systems::energy(anh, systems::Basis::su11_even, 2) ==
          doctest::Approx(4.62).epsilon(1e-12));

    const auto tl = systems::SystemSpec::two_level(1.0);
    CHECK(systems::energy(tl, systems::Basis::dicke_j_half, 1) == 0.5);
    CHECK(systems::energy(tl, systems::Basis::dicke_j_half, 0) == -0.5);
    CHECK_THROWS_AS(systems::energy(tl, systems::Basis::dicke_j_half, 2), DomainError);

    // basis/kind mismatches
    CHECK_THROWS_AS(systems::energy(harm, systems::Basis::su11_even, 0), ConfigError);
    CHECK_THROWS_AS(systems::energy(anh, systems::Basis::number, 0), ConfigError);
    CHECK_THROWS_AS(systems::energy(tl, systems::Basis::number, 0), ConfigError);
}

TEST_CASE("su11 sector energies cover the anharmonic number-basis spectrum") {
    // The anharmonic Hamiltonian is diagonal in the number basis with
    // E_n = omega (n + 1/2) + (lambda/2) n (n - 1); the two sectors must
    // reproduce it at n = 2m and n = 2m + 1.
    const double omega = 1.3, lambda = 0.07;
    const auto anh = systems::SystemSpec::anharmonic(omega, lambda);
    for (std::size_t m = 0; m < 10; ++m) {
        const double even_n = 2.0 * m;
        const double odd_n = 2.0 * m + 1.0;
        const double e_even = omega * (even_n + 0.5) + 0.5 * lambda * even_n * (even_n - 1.0);
        const double e_odd = omega * (odd_n + 0.5) + 0.5 * lambda * odd_n * (odd_n - 1.0);
        CHECK(systems::energy(anh, systems::Basis::su11_even, m) ==
              doctest::Approx(e_even).epsilon(1e-14));
        CHECK(systems::energy(anh, systems::Basis::su11_odd, m) ==
              doctest::Approx(e_odd).epsilon(1e-14));
    }
}

TEST_CASE("propagate rejects misuse") {
    auto rho = coherent_dm(5.0, 20);
    const auto spec = systems::SystemSpec::harmonic(1.0);
    auto evolved = systems::propagate(rho, spec, kFigBath, 0.1);
    CHECK_THROWS_AS(systems::propagate(evolved, spec, kFigBath, 0.1), UsageError);
    CHECK_THROWS_AS(systems::propagate(rho, spec, kFigBath, -1.0), DomainError);
}

TEST_CASE("unitary evolution preserves magnitudes") {
    const auto unitary = bath::BathParams::zero_t(0.0, 100.0);
    const auto spec = systems::SystemSpec::harmonic(1.0);
    const auto rho0 = coherent_dm(5.0, 30);
    const auto rho = systems::propagate(rho0, spec, unitary, 0.35);
    for (Eigen::Index i = 0; i < rho.entries.rows(); ++i) {
        for (Eigen::Index j = 0; j < rho.entries.cols(); ++j) {
            CHECK(std::abs(std::abs(rho.entries(i, j)) - std::abs(rho0.entries(i, j))) < 1e-15);
        }
    }
}

TEST_CASE("diagonal matrices are fixed points") {
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(6, 6);
    double w = 0.4;
    for (int i = 0; i < 6; ++i) {
        diag(i, i) = w;
        w *= 0.5;
    }
    diag(5, 5) += 1.0 - diag.trace().real();
    systems::ReducedDensityMatrix rho0{diag, systems::Basis::number, 0.0, 0.0};
    const auto rho = systems::propagate(rho0, systems::SystemSpec::harmonic(1.0), kFigBath, 0.2);
    CHECK((rho.entries - diag).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("populations frozen and hermiticity preserved") {
    const auto rho0 = coherent_dm(5.0, 40);
    const auto rho =
        systems::propagate(rho0, systems::SystemSpec::harmonic(1.0),
                           bath::BathParams::high_t(0.0025, 100.0, 300.0, 1.0), 0.2);
    for (Eigen::Index i = 0; i < 40; ++i) {
        CHECK(rho.entries(i, i) == rho0.entries(i, i));
    }
    rho.check_invariants();
    CHECK(rho.t == 0.2);
}

TEST_CASE("propagator factors match the printed harmonic form") {
    // Independent reimplementation of the harmonic specialization:
    // rho_nm(t) = e^{-i w (n-m) t} e^{i w^2 (n-m)(n+m+1) eta} e^{-w^2 (n-m)^2 gamma} rho_nm(0)
    const double omega = 1.0, t = 0.1;
    const auto spec = systems::SystemSpec::harmonic(omega);
    const auto rho0 = coherent_dm(5.0, 25);
    const auto rho = systems::propagate(rho0, spec, kFigBath, t);
    const double eta = bath::eta_closed(kFigBath, t);
    const double gamma = bath::gamma_closed(kFigBath, t);
    for (int n = 0; n < 25; ++n) {
        for (int m = 0; m < 25; ++m) {
            const double dn = n - m;
            const complex<double> factor =
                std::polar(1.0, -omega * dn * t) *
                std::polar(1.0, omega * omega * dn * (n + m + 1.0) * eta) *
                std::exp(-omega * omega * dn * dn * gamma);
            const complex<double> expect = factor * rho0.entries(n, m);
            CHECK(std::abs(rho.entries(n, m) - expect) < 1e-15);
        }
    }

    // off-diagonal |rho_01| shrinks by exactly exp(-w^2 gamma)
    CHECK(std::abs(rho.entries(0, 1)) ==
          doctest::Approx(std::abs(rho0.entries(0, 1)) * std::exp(-omega * omega * gamma))
              .epsilon(1e-13));
}

TEST_CASE("propagator factors match the printed su11 form") {
    // e^{-2i(m-n)[w + l(m+n+2k-1)]t}
    // e^{4i(m-n)[w + l(m+n+2k-1)][w(n+m+2k) + l(n^2+m^2+(2k-1)(m+n))] eta}
    // e^{-4(m-n)^2 [w + l(m+n+2k-1)]^2 gamma}
    const double omega = 1.0, lambda = 0.02, t = 0.1;
    const auto spec = systems::SystemSpec::anharmonic(omega, lambda);
    const auto q = states::kerr_coeffs({0.02, {std::sqrt(5.0), 0.0}}, 40);
    const auto pair0 = states::su11_sectors_from_coeffs(q);
    const auto pair = systems::propagate(pair0, spec, kFigBath, t);
    const double eta = bath::eta_closed(kFigBath, t);
    const double gamma = bath::gamma_closed(kFigBath, t);

    const auto check_sector = [&](const systems::ReducedDensityMatrix& out,
                                  const systems::ReducedDensityMatrix& in, double k) {
        const int dim = static_cast<int>(in.dim());
        for (int m = 0; m < dim; ++m) {
            for (int n = 0; n < dim; ++n) {
                const double dmn = m - n;
                const double bracket = omega + lambda * (m + n + 2.0 * k - 1.0);
                const double second = omega * (n + m + 2.0 * k) +
                                      lambda * (double(n) * n + double(m) * m +
                                                (2.0 * k - 1.0) * (m + n));
                const complex<double> factor =
                    std::polar(1.0, -2.0 * dmn * bracket * t) *
                    std::polar(1.0, 4.0 * dmn * bracket * second * eta) *
                    std::exp(-4.0 * dmn * dmn * bracket * bracket * gamma);
                CHECK(std::abs(out.entries(m, n) - factor * in.entries(m, n)) < 1e-15);
            }
        }
    };
    check_sector(pair.even, pair0.even, 0.25);
    check_sector(pair.odd, pair0.odd, 0.75);
}

TEST_CASE("propagator factors match the printed two-level form") {
    // e^{-i w (m-n) t} e^{i w^2 (m^2-n^2) eta} e^{-w^2 (m-n)^2 gamma} with m, n = +-1/2
    const double omega = 1.0, t = 0.07;
    const auto spec = systems::SystemSpec::two_level(omega);
    const auto rho0 = states::atomic_initial_dm(
        states::AtomicCoherentParams{std::numbers::pi / 4, std::numbers::pi / 4});
    const auto rho = systems::propagate(rho0, spec, kFigBath, t);
    const double eta = bath::eta_closed(kFigBath, t);
    const double gamma = bath::gamma_closed(kFigBath, t);
    const double ms[2] = {-0.5, 0.5};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double dm = ms[i] - ms[j];
            const complex<double> factor =
                std::polar(1.0, -omega * dm * t) *
                std::polar(1.0, omega * omega * (ms[i] * ms[i] - ms[j] * ms[j]) * eta) *
                std::exp(-omega * omega * dm * dm * gamma);
            CHECK(std::abs(rho.entries(i, j) - factor * rho0.entries(i, j)) < 1e-16);
        }
    }
}

TEST_CASE("anharmonic sectors reduce to the harmonic propagation at lambda = 0") {
    const auto harm = systems::SystemSpec::harmonic(1.0);
    const auto anh = systems::SystemSpec::anharmonic(1.0, 0.0);
    const std::size_t N = 40;
    const auto c = states::coherent_coeffs({std::sqrt(5.0), 0.3}, N);

    const auto full = systems::propagate(states::dm_from_coeffs(c, systems::Basis::number),
                                         harm, kFigBath, 0.1);
    const auto pair = systems::propagate(states::su11_sectors_from_coeffs(c), anh, kFigBath, 0.1);

    for (std::size_t m = 0; m < pair.even.dim(); ++m) {
        for (std::size_t n = 0; n < pair.even.dim(); ++n) {
            CHECK(std::abs(pair.even.entries(m, n) - full.entries(2 * m, 2 * n)) < 1e-12);
        }
    }
    for (std::size_t m = 0; m < pair.odd.dim(); ++m) {
        for (std::size_t n = 0; n < pair.odd.dim(); ++n) {
            CHECK(std::abs(pair.odd.entries(m, n) - full.entries(2 * m + 1, 2 * n + 1)) < 1e-12);
        }
    }
}

TEST_CASE("decoherence factor magnitude never exceeds one for gamma >= 0") {
    const auto rho0 = coherent_dm(5.0, 30);
    for (double t : {0.05, 0.2, 1.0}) {
        const auto rho = systems::propagate(rho0, systems::SystemSpec::harmonic(1.0),
                                            bath::BathParams::zero_t(0.0025, 100.0), t);
        for (Eigen::Index i = 0; i < 30; ++i) {
            for (Eigen::Index j = 0; j < 30; ++j) {
                CHECK(std::abs(rho.entries(i, j)) <= std::abs(rho0.entries(i, j)) + 1e-16);
            }
        }
    }
}

TEST_CASE("master equation finite-difference consistency") {
    // d rho_nm / dt = [-i(E_n - E_m) + i eta'(t)(E_n^2 - E_m^2)
    //                  - (E_n - E_m)^2 gamma'(t)] rho_nm(t)
    // with eta', gamma' and the left side all taken as centered differences.
    const double omega = 1.0, delta = 1e-5;
    const auto spec = systems::SystemSpec::harmonic(omega);
    const auto rho0 = coherent_dm(5.0, 6);
    const auto baths = {bath::BathParams::zero_t(0.0025, 100.0, 2.0),
                        bath::BathParams::high_t(0.0025, 100.0, 300.0, 1.0)};
    for (const auto& b : baths) {
        for (double t : {0.05, 0.1, 0.2}) {
            const auto rp = systems::propagate(rho0, spec, b, t + delta);
            const auto rm = systems::propagate(rho0, spec, b, t - delta);
            const auto rc = systems::propagate(rho0, spec, b, t);
            const double etad =
                (bath::eta_closed(b, t + delta) - bath::eta_closed(b, t - delta)) / (2 * delta);
            const double gammad =
                (bath::gamma_closed(b, t + delta) - bath::gamma_closed(b, t - delta)) /
                (2 * delta);
            for (int n = 0; n <= 5; ++n) {
                for (int m = 0; m <= 5; ++m) {
                    const double en = omega * (n + 0.5);
                    const double em = omega * (m + 0.5);
                    const complex<double> lhs =
                        (rp.entries(n, m) - rm.entries(n, m)) / (2.0 * delta);
                    const complex<double> rhs =
                        (complex<double>(0.0, -(en - em)) +
                         complex<double>(0.0, etad * (en * en - em * em)) -
                         (en - em) * (en - em) * gammad) *
                        rc.entries(n, m);
                    const double scale = std::max(std::abs(lhs), std::abs(rhs));
                    if (scale > 1e-12) {
                        CHECK(std::abs(lhs - rhs) <= 1e-5 * scale);
                    }
                }
            }
        }
    }
}

TEST_CASE("trace window accounts for truncation") {
    auto c = states::coherent_coeffs({std::sqrt(5.0), 0.0}, 8);  // deliberately tight
    CHECK(c.tail_weight > 1e-6);
    auto dm = states::dm_from_coeffs(c, systems::Basis::number);
    CHECK_NOTHROW(dm.check_invariants());
    dm.trunc_error = 0.0;  // now the missing weight violates the window
    CHECK_THROWS_AS(dm.check_invariants(), NumericalError);
}
