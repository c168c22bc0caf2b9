// phasedist.hpp — phase distributions P(theta) for oscillator states and
// P(phi) for the two-level atom, plus circular statistics used to quantify
// broadening and peak drift.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qnd/systems.hpp"

namespace qnd::phasedist {

// Fourier-mode form of a phase distribution:
//   P(theta) = (1/2pi) sum_d S_d exp(-i step d theta),  S_{-d} = conj(S_d).
// amps[d] holds S_d for d >= 0; step is 1 for number/Dicke bases and 2 for
// the SU(1,1) sector sums, whose exponents carry the doubled index.
struct PhaseModes {
    std::vector<std::complex<double>> amps;
    int step = 1;
};

// Diagonal-grouped mode assembly, S_d = sum_n rho_{n+d,n}: O(N^2) instead of
// O(N^2 M) for direct grid evaluation.
PhaseModes oscillator_modes(const systems::ReducedDensityMatrix& rho);

// Two-sector SU(1,1) sum: both sectors contribute to the same doubled-index
// Fourier modes.
PhaseModes oscillator_modes(const systems::Su11SectorPair& rho);

// P at arbitrary angles (radians); deterministic summation order.
std::vector<double> evaluate(const PhaseModes& modes, std::span<const double> angles);

struct SourceInfo {
    std::string system;
    std::string state;
    std::string bath;
    double t = 0.0;
};

// Uniform angular grid over [0, 2pi) with nonnegative values.
struct PhaseDistribution {
    std::vector<double> grid;
    std::vector<double> values;
    SourceInfo info;

    std::size_t size() const { return grid.size(); }

    // Periodic trapezoid integral over [0, 2pi].
    double integral() const;
    double min_value() const;
    double max_value() const;
};

// Render modes onto an M-point uniform grid. Enforces the distribution
// invariants: values >= -1e-12 (then clipped to 0) and integral within
// 1e-6 of one.
PhaseDistribution render(const PhaseModes& modes, std::size_t M);

PhaseDistribution oscillator_phase_distribution(const systems::ReducedDensityMatrix& rho,
                                                std::size_t M);
PhaseDistribution oscillator_phase_distribution(const systems::Su11SectorPair& rho,
                                                std::size_t M);

// Two-level phase distribution from a propagated Dicke-basis matrix, with the
// polar integral closed out as a Gamma-function ratio:
//   P(phi) = (2j+1)/(2pi) sum_{n,m} sqrt(C(2j,j+n) C(2j,j+m))
//            * Gamma(j + (n+m)/2 + 1) Gamma(j - (n+m)/2 + 1) / Gamma(2j + 2)
//            * rho_{nm} e^{i(n-m) phi}.
PhaseDistribution atomic_phase_distribution_general(const systems::ReducedDensityMatrix& rho,
                                                    std::size_t M);

// Closed forms for the three two-level cases at j = 1/2:
//   coherent:        (1/2pi)[1 + (pi/4) sin(alpha) cos(beta + w t - phi) e^{-w^2 gamma}]
//   squeezed south:  (1/2pi)[1 - (pi/(4 cosh Theta)) cos(phi - w t) e^{-w^2 gamma}]
//   squeezed north:  same with + sign.
enum class AtomicVariant { coherent, squeezed_south, squeezed_north };

struct AtomicClosedFormParams {
    AtomicVariant variant = AtomicVariant::coherent;
    double alpha = 0.0;    // coherent only
    double beta = 0.0;     // coherent only
    double theta_s = -0.5; // squeezed only
};

PhaseDistribution atomic_closed_form(const AtomicClosedFormParams& p,
                                     const systems::SystemSpec& spec,
                                     const bath::BathParams& bath, double t,
                                     std::size_t M);

struct CircularStats {
    double mean_angle = 0.0;        // arg of the first circular moment
    double resultant_length = 0.0;  // R in [0, 1]
    double circular_variance = 1.0; // 1 - R
    double peak_angle = 0.0;        // grid argmax with parabolic refinement
    double peak_value = 0.0;
};

CircularStats circular_stats(const PhaseDistribution& pd);

// Count strict local maxima with value above ratio * min. Values within
// rel_floor of the full range above the minimum are ignored: the far tails of
// sharply peaked distributions are pure rounding noise (true values fall many
// orders below machine precision), and noise wiggles must not count as peaks.
int count_local_maxima(const PhaseDistribution& pd, double ratio = 1.05,
                       double rel_floor = 1e-9);

// Shortest signed angular distance a - b, in (-pi, pi].
double circular_difference(double a, double b);

} // namespace qnd::phasedist
