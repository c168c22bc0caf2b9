#include "qnd/systems.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qnd/errors.hpp"

namespace qnd::systems {

namespace {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::number: return "number";
        case Basis::su11_even: return "su11_even";
        case Basis::su11_odd: return "su11_odd";
        case Basis::dicke_j_half: return "dicke_j_half";
    }
    return "?";
}

} // namespace

SystemSpec SystemSpec::harmonic(double omega) {
    SystemSpec s{SystemKind::harmonic, omega, 0.0};
    s.validate();
    return s;
}

SystemSpec SystemSpec::anharmonic(double omega, double lambda) {
    SystemSpec s{SystemKind::anharmonic, omega, lambda};
    s.validate();
    return s;
}

SystemSpec SystemSpec::two_level(double omega) {
    SystemSpec s{SystemKind::two_level, omega, 0.0};
    s.validate();
    return s;
}

void SystemSpec::validate() const {
    if (!(omega > 0.0)) throw ConfigError("SystemSpec: omega must be > 0");
    if (kind == SystemKind::anharmonic) {
        if (!(lambda >= 0.0)) throw ConfigError("SystemSpec: lambda must be >= 0");
    } else if (lambda != 0.0) {
        throw ConfigError("SystemSpec: lambda is only meaningful for the anharmonic kind");
    }
}

double energy(const SystemSpec& spec, Basis basis, std::size_t n) {
    spec.validate();
    const double dn = static_cast<double>(n);
    switch (spec.kind) {
        case SystemKind::harmonic:
            if (basis != Basis::number) break;
            return spec.omega * (dn + 0.5);
        case SystemKind::anharmonic: {
            if (basis != Basis::su11_even && basis != Basis::su11_odd) break;
            const double k = (basis == Basis::su11_even) ? 0.25 : 0.75;
            return 2.0 * (spec.omega * (dn + k) + spec.lambda * dn * (dn + 2.0 * k - 1.0));
        }
        case SystemKind::two_level: {
            if (basis != Basis::dicke_j_half) break;
            if (n > 1) throw DomainError("energy: dicke_j_half index must be 0 or 1");
            const double m = (n == 0) ? -0.5 : 0.5;
            return spec.omega * m;
        }
    }
    throw ConfigError(std::string("energy: basis ") + basis_name(basis) +
                      " does not match the system kind");
}

void ReducedDensityMatrix::check_invariants() const {
    const auto n = entries.rows();
    if (n != entries.cols() || n == 0) {
        throw NumericalError("ReducedDensityMatrix: entries must be square and nonempty");
    }
    double herm_dev = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            herm_dev = std::max(herm_dev, std::abs(entries(i, j) - std::conj(entries(j, i))));
        }
    }
    if (herm_dev > 1e-12) {
        throw NumericalError("ReducedDensityMatrix: hermiticity violated by " +
                             std::to_string(herm_dev));
    }
    const double tr = entries.trace().real();
    if (tr < 1.0 - trunc_error - 1e-12 || tr > 1.0 + 1e-12) {
        throw NumericalError("ReducedDensityMatrix: trace " + std::to_string(tr) +
                             " outside [1 - trunc_error, 1] window");
    }
}

ReducedDensityMatrix propagate(const ReducedDensityMatrix& rho0, const SystemSpec& spec,
                               const bath::BathParams& bath, double t) {
    spec.validate();
    bath.validate();
    if (rho0.t != 0.0) {
        throw UsageError("propagate: input matrix was already evolved (t != 0)");
    }
    if (!(t >= 0.0)) throw DomainError("propagate: t must be >= 0");

    const auto [eta, gamma] = bath::kernels_for_time(bath, t);
    const std::size_t n = rho0.dim();
    std::vector<double> energies(n);
    for (std::size_t i = 0; i < n; ++i) energies[i] = energy(spec, rho0.basis, i);

    ReducedDensityMatrix out;
    out.basis = rho0.basis;
    out.t = t;
    out.trunc_error = rho0.trunc_error;
    out.entries.resize(rho0.entries.rows(), rho0.entries.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double de = energies[i] - energies[j];
            const double se = energies[i] + energies[j];
            // exp[-i de t + i eta de (E_i + E_j) - gamma de^2]
            const std::complex<double> factor =
                std::exp(std::complex<double>(-gamma * de * de, -de * t + eta * de * se));
            out.entries(i, j) = factor * rho0.entries(i, j);
        }
    }
    return out;
}

Su11SectorPair propagate(const Su11SectorPair& rho0, const SystemSpec& spec,
                         const bath::BathParams& bath, double t) {
    return {propagate(rho0.even, spec, bath, t), propagate(rho0.odd, spec, bath, t)};
}

} // namespace qnd::systems
