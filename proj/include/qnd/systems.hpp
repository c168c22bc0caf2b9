// systems.hpp — system energy spectra and the QND reduced-density-matrix
// propagator for the harmonic oscillator, the anharmonic (SU(1,1))
// oscillator, and the two-level atom. hbar = 1 throughout.

#pragma once

#include <Eigen/Dense>
#include <cstddef>

#include "qnd/bath.hpp"

namespace qnd::systems {

enum class SystemKind { harmonic, anharmonic, two_level };

// Eigenbasis tag of a reduced density matrix. The SU(1,1) discrete-series
// sectors carry Bargmann index k = 1/4 (even Fock states) and k = 3/4 (odd).
enum class Basis { number, su11_even, su11_odd, dicke_j_half };

struct SystemSpec {
    SystemKind kind = SystemKind::harmonic;
    double omega = 1.0;    // system frequency, > 0
    double lambda = 0.0;   // anharmonicity, >= 0, anharmonic only

    static SystemSpec harmonic(double omega);
    static SystemSpec anharmonic(double omega, double lambda);
    static SystemSpec two_level(double omega);

    void validate() const;
};

// Energy eigenvalue for basis index n:
//   harmonic  / number:     omega (n + 1/2)
//   anharmonic/ su11 (k):   2 [omega (n + k) + lambda n (n + 2k - 1)]
//   two_level / dicke:      omega m with index 0 -> m = -1/2, 1 -> m = +1/2
// Basis/kind mismatches are ConfigErrors.
double energy(const SystemSpec& spec, Basis basis, std::size_t n);

// Truncated reduced density matrix in a system eigenbasis. trunc_error bounds
// the state weight not represented in this matrix, so the trace stays within
// [1 - trunc_error - 1e-12, 1 + 1e-12].
struct ReducedDensityMatrix {
    Eigen::MatrixXcd entries;
    Basis basis = Basis::number;
    double t = 0.0;
    double trunc_error = 0.0;

    std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }

    // Hermiticity to 1e-12 and the trace window above; throws NumericalError.
    void check_invariants() const;
};

// Both SU(1,1) sectors of one oscillator state. The even and odd sector
// matrices together carry the full state; each sector's trunc_error counts
// the weight living outside that sector.
struct Su11SectorPair {
    ReducedDensityMatrix even;
    ReducedDensityMatrix odd;
};

// QND propagation of rho(0) by time t under the given bath:
//   rho_nm(t) = exp[-i (E_n - E_m) t] exp[+i eta(t) (E_n^2 - E_m^2)]
//               exp[-gamma(t) (E_n - E_m)^2] rho_nm(0).
// Populations are untouched; gamma0 = 0 reduces to a pure phase rotation.
// rho0 must be unevolved (t = 0); re-propagating is a UsageError.
ReducedDensityMatrix propagate(const ReducedDensityMatrix& rho0, const SystemSpec& spec,
                               const bath::BathParams& bath, double t);

Su11SectorPair propagate(const Su11SectorPair& rho0, const SystemSpec& spec,
                         const bath::BathParams& bath, double t);

} // namespace qnd::systems
