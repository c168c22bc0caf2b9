// states.hpp — initial-state generators: coherent, squeezed coherent, Kerr,
// squeezed Kerr, and the three two-level states (Wigner-Dicke, atomic
// coherent, atomic squeezed). All produce rho(0) in the matching eigenbasis.

#pragma once

#include <complex>
#include <cstddef>
#include <variant>

#include "qnd/systems.hpp"

namespace qnd::states {

// Below this squeeze magnitude the squeezed-state formulas divide by ~0;
// callers should use the unsqueezed generators instead.
inline constexpr double kMinSqueeze = 1e-8;

struct CoherentParams {
    double alpha_mag = 0.0;  // |alpha| >= 0
    double theta0 = 0.0;     // phase of alpha, radians
};

struct SqueezeParams {
    double r1 = 0.0;     // squeeze magnitude, >= kMinSqueeze
    double phase = 0.0;  // squeeze phase (psi for squeezed coherent, phi for squeezed Kerr)
};

struct KerrParams {
    double chi = 0.0;  // accumulated Kerr phase per n(n-1)
    CoherentParams base;
};

// Truncated pure-state coefficients c_n, n < N, plus the discarded weight
// 1 - sum |c_n|^2.
struct StateCoeffs {
    Eigen::VectorXcd coeffs;
    double tail_weight = 0.0;

    std::size_t dim() const { return static_cast<std::size_t>(coeffs.size()); }
};

// Number-basis coherent amplitudes c_n = <n|alpha> = |alpha|^n e^{i n theta0}
// e^{-|alpha|^2/2} / sqrt(n!).
StateCoeffs coherent_coeffs(const CoherentParams& p, std::size_t N);

// Kerr-state amplitudes q_n = c_n e^{-i chi n (n-1)}; chi = 0 reproduces
// coherent_coeffs exactly.
StateCoeffs kerr_coeffs(const KerrParams& p, std::size_t N);

// Number-basis squeeze-operator matrix element G_{mp} = <m|S(z)|p> with
// z = r1 e^{i phase}. Exactly zero for mixed parity; even-even and odd-odd
// blocks use the terminating 2F1 with c = 1/2 and 3/2 respectively,
// assembled in log space.
std::complex<double> squeeze_matrix_element(std::size_t m, std::size_t p,
                                            const SqueezeParams& s);

// Squeezed-Kerr amplitudes s_n = sum_p G_{np} q_p (parity-respecting).
StateCoeffs squeezed_kerr_coeffs(const KerrParams& p, const SqueezeParams& s,
                                 std::size_t N);

// Squeezed-coherent density matrix rho_mn(0) built from the Hermite-product
// closed form with z_H = |alpha| e^{i(theta0 - psi/2)} / sqrt(sinh 2 r1).
// The printed form is not guaranteed trace-1 under truncation, so the result
// is renormalized; the pre-normalization trace is reported through
// pre_norm_trace when non-null.
systems::ReducedDensityMatrix squeezed_coherent_dm(const CoherentParams& p,
                                                   const SqueezeParams& s, std::size_t N,
                                                   double* pre_norm_trace = nullptr);

// Outer product |c><c| in the given basis; trunc_error = tail weight.
systems::ReducedDensityMatrix dm_from_coeffs(const StateCoeffs& c, systems::Basis basis);

// Split number-basis amplitudes into the SU(1,1) even/odd sector matrices:
// even_{mn} = c_{2m} c*_{2n}, odd_{mn} = c_{2m+1} c*_{2n+1}.
systems::Su11SectorPair su11_sectors_from_coeffs(const StateCoeffs& c);

// --------------------------- two-level states --------------------------

struct DickeParams {
    double m_tilde = 0.5;  // +-1/2
};

struct AtomicCoherentParams {
    double alpha = 0.0;  // polar angle in [0, pi]
    double beta = 0.0;   // azimuthal angle, radians
};

struct AtomicSqueezedParams {
    double theta_s = -0.5;  // squeeze parameter Theta < 0
    double pole = -0.5;     // p = -1/2 (south) or +1/2 (north)
};

using AtomicStateParams =
    std::variant<DickeParams, AtomicCoherentParams, AtomicSqueezedParams>;

// 2x2 density matrix in the Dicke basis, ordering (m = -1/2, m = +1/2).
// The atomic squeezed normalization A_p is fixed numerically and agrees with
// the closed form |A_p|^2 = 1/cosh(Theta) at j = 1/2.
systems::ReducedDensityMatrix atomic_initial_dm(const AtomicStateParams& p);

// |zeta| = artanh(exp(2 Theta)) / 2, the squeezing magnitude corresponding to
// a given Theta < 0.
double zeta_magnitude_from_theta(double theta_s);

// Smallest dimension N <= kNMax such that the Poisson weight above N is
// below eps; used to truncate coherent/Kerr states.
std::size_t poisson_dim(double alpha2, double eps = 1e-12);

} // namespace qnd::states
