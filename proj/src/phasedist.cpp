#include "qnd/phasedist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qnd/errors.hpp"
#include "qnd/specfun.hpp"

namespace qnd::phasedist {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

std::vector<double> uniform_grid(std::size_t M) {
    if (M < 8) throw DomainError("phase grid must have at least 8 points");
    std::vector<double> grid(M);
    for (std::size_t i = 0; i < M; ++i) {
        grid[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(M);
    }
    return grid;
}

PhaseModes diagonal_modes(const Eigen::MatrixXcd& rho) {
    const Eigen::Index n = rho.rows();
    PhaseModes modes;
    modes.amps.resize(static_cast<std::size_t>(n));
    for (Eigen::Index d = 0; d < n; ++d) {
        std::complex<double> acc{0.0, 0.0};
        for (Eigen::Index k = 0; k + d < n; ++k) acc += rho(k + d, k);
        modes.amps[static_cast<std::size_t>(d)] = acc;
    }
    return modes;
}

// Drop trailing modes whose weight is far below the emitted precision, so the
// Nyquist guard in render() tracks live content rather than truncation zeros.
void trim_modes(PhaseModes& modes) {
    double top = 0.0;
    for (const auto& a : modes.amps) top = std::max(top, std::abs(a));
    std::size_t keep = modes.amps.size();
    while (keep > 1 && std::abs(modes.amps[keep - 1]) < 1e-30 * top) --keep;
    modes.amps.resize(keep);
}

void accumulate(std::vector<std::complex<double>>& into,
                const std::vector<std::complex<double>>& from) {
    if (from.size() > into.size()) into.resize(from.size(), {0.0, 0.0});
    for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

} // namespace

PhaseModes oscillator_modes(const systems::ReducedDensityMatrix& rho) {
    if (rho.basis != systems::Basis::number) {
        throw ConfigError("oscillator_modes: single-matrix form requires the number basis; "
                          "SU(1,1) sector states must be passed as a sector pair");
    }
    PhaseModes modes = diagonal_modes(rho.entries);
    modes.step = 1;
    trim_modes(modes);
    return modes;
}

PhaseModes oscillator_modes(const systems::Su11SectorPair& rho) {
    if (rho.even.basis != systems::Basis::su11_even ||
        rho.odd.basis != systems::Basis::su11_odd) {
        throw ConfigError("oscillator_modes: sector pair must carry su11_even/su11_odd tags");
    }
    PhaseModes modes = diagonal_modes(rho.even.entries);
    accumulate(modes.amps, diagonal_modes(rho.odd.entries).amps);
    modes.step = 2;
    trim_modes(modes);
    return modes;
}

std::vector<double> evaluate(const PhaseModes& modes, std::span<const double> angles) {
    std::vector<double> out(angles.size());
    const std::size_t nd = modes.amps.size();
    for (std::size_t i = 0; i < angles.size(); ++i) {
        double acc = (nd > 0) ? modes.amps[0].real() : 0.0;
        for (std::size_t d = 1; d < nd; ++d) {
            const double ang = -static_cast<double>(modes.step) * static_cast<double>(d) * angles[i];
            // S_{-d} = conj(S_d): the pair contributes 2 Re(S_d e^{-i s d theta}).
            acc += 2.0 * (modes.amps[d] * std::polar(1.0, ang)).real();
        }
        out[i] = acc / kTwoPi;
    }
    return out;
}

double PhaseDistribution::integral() const {
    // Uniform periodic grid: the trapezoid rule reduces to the mean.
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc * kTwoPi / static_cast<double>(values.size());
}

double PhaseDistribution::min_value() const {
    return *std::min_element(values.begin(), values.end());
}

double PhaseDistribution::max_value() const {
    return *std::max_element(values.begin(), values.end());
}

namespace {

PhaseDistribution finalize(std::vector<double> grid, std::vector<double> values) {
    PhaseDistribution pd;
    pd.grid = std::move(grid);
    pd.values = std::move(values);
    double min_v = pd.min_value();
    if (min_v < -1e-12) {
        throw NumericalError("phase distribution positivity violated: min = " +
                             std::to_string(min_v));
    }
    for (double& v : pd.values) v = std::max(v, 0.0);
    const double integ = pd.integral();
    if (std::abs(integ - 1.0) > 1e-6) {
        throw NumericalError("phase distribution normalization violated: integral = " +
                             std::to_string(integ));
    }
    return pd;
}

} // namespace

PhaseDistribution render(const PhaseModes& modes, std::size_t M) {
    // Nyquist guard: modes with step*d = 0 (mod M) alias onto the mean.
    const std::size_t highest =
        modes.amps.empty() ? 0 : static_cast<std::size_t>(modes.step) * (modes.amps.size() - 1);
    if (M <= 2 * highest) {
        throw ConfigError("phase grid of " + std::to_string(M) +
                          " points cannot resolve Fourier mode " + std::to_string(highest) +
                          "; need M > " + std::to_string(2 * highest));
    }
    std::vector<double> grid = uniform_grid(M);
    std::vector<double> values = evaluate(modes, grid);
    return finalize(std::move(grid), std::move(values));
}

PhaseDistribution oscillator_phase_distribution(const systems::ReducedDensityMatrix& rho,
                                                std::size_t M) {
    PhaseDistribution pd = render(oscillator_modes(rho), M);
    pd.info.t = rho.t;
    return pd;
}

PhaseDistribution oscillator_phase_distribution(const systems::Su11SectorPair& rho,
                                                std::size_t M) {
    PhaseDistribution pd = render(oscillator_modes(rho), M);
    pd.info.t = rho.even.t;
    return pd;
}

PhaseDistribution atomic_phase_distribution_general(const systems::ReducedDensityMatrix& rho,
                                                    std::size_t M) {
    if (rho.basis != systems::Basis::dicke_j_half || rho.dim() != 2) {
        throw ConfigError("atomic_phase_distribution_general: expects a 2x2 Dicke-basis matrix");
    }
    // Written for general j (dim = 2j + 1), exercised at j = 1/2.
    const Eigen::Index dim = rho.entries.rows();
    const double j = 0.5 * static_cast<double>(dim - 1);
    const auto& lf = specfun::LogFactorialTable::shared();
    const auto log_binom = [&lf, dim](Eigen::Index i) {
        return lf(static_cast<std::size_t>(dim - 1)) - lf(static_cast<std::size_t>(i)) -
               lf(static_cast<std::size_t>(dim - 1 - i));
    };

    PhaseModes modes;
    modes.step = 1;
    modes.amps.assign(static_cast<std::size_t>(dim), {0.0, 0.0});
    const double lgamma_denom = specfun::ln_gamma(2.0 * j + 2.0);
    for (Eigen::Index in = 0; in < dim; ++in) {
        for (Eigen::Index im = 0; im < dim; ++im) {
            const double n = static_cast<double>(in) - j;
            const double m = static_cast<double>(im) - j;
            const double w =
                (2.0 * j + 1.0) *
                std::exp(0.5 * (log_binom(in) + log_binom(im)) +
                         specfun::ln_gamma(j + 0.5 * (n + m) + 1.0) +
                         specfun::ln_gamma(j - 0.5 * (n + m) + 1.0) - lgamma_denom);
            // e^{i(n-m)phi} maps onto mode d = m - n of the shared convention
            // P = (1/2pi) sum_d S_d e^{-id phi}.
            const Eigen::Index d = im - in;
            if (d >= 0) modes.amps[static_cast<std::size_t>(d)] += w * rho.entries(in, im);
        }
    }
    PhaseDistribution pd = render(modes, M);
    pd.info.t = rho.t;
    return pd;
}

PhaseDistribution atomic_closed_form(const AtomicClosedFormParams& p,
                                     const systems::SystemSpec& spec,
                                     const bath::BathParams& bath, double t,
                                     std::size_t M) {
    spec.validate();
    if (spec.kind != systems::SystemKind::two_level) {
        throw ConfigError("atomic_closed_form: system must be two_level");
    }
    const auto [eta, gamma] = bath::kernels_for_time(bath, t);
    (void)eta;  // the j = 1/2 drift term carries E_n^2 - E_m^2 = 0
    const double w2g = spec.omega * spec.omega * gamma;

    double contrast = 0.0;
    double phase_ref = 0.0;
    double sign = 1.0;
    switch (p.variant) {
        case AtomicVariant::coherent:
            contrast = 0.25 * kPi * std::sin(p.alpha) * std::exp(-w2g);
            phase_ref = p.beta + spec.omega * t;  // cos(beta + w t - phi)
            sign = 1.0;
            break;
        case AtomicVariant::squeezed_south:
        case AtomicVariant::squeezed_north:
            if (!(p.theta_s < 0.0)) {
                throw DomainError("atomic_closed_form: Theta must be negative");
            }
            contrast = 0.25 * kPi / std::cosh(p.theta_s) * std::exp(-w2g);
            phase_ref = spec.omega * t;  // cos(phi - w t)
            sign = (p.variant == AtomicVariant::squeezed_north) ? 1.0 : -1.0;
            break;
    }

    std::vector<double> grid = uniform_grid(M);
    std::vector<double> values(M);
    for (std::size_t i = 0; i < M; ++i) {
        values[i] = (1.0 + sign * contrast * std::cos(grid[i] - phase_ref)) / kTwoPi;
    }
    PhaseDistribution pd = finalize(std::move(grid), std::move(values));
    pd.info.t = t;
    return pd;
}

CircularStats circular_stats(const PhaseDistribution& pd) {
    const std::size_t M = pd.size();
    const double h = kTwoPi / static_cast<double>(M);
    std::complex<double> z{0.0, 0.0};
    for (std::size_t i = 0; i < M; ++i) {
        z += pd.values[i] * std::polar(1.0, pd.grid[i]);
    }
    z *= h;

    CircularStats st;
    st.resultant_length = std::min(std::abs(z), 1.0);
    st.circular_variance = 1.0 - st.resultant_length;
    st.mean_angle = std::fmod(std::arg(z) + kTwoPi, kTwoPi);

    std::size_t imax = 0;
    for (std::size_t i = 1; i < M; ++i) {
        if (pd.values[i] > pd.values[imax]) imax = i;
    }
    const double ym = pd.values[(imax + M - 1) % M];
    const double y0 = pd.values[imax];
    const double yp = pd.values[(imax + 1) % M];
    const double denom = ym - 2.0 * y0 + yp;
    double delta = 0.0;
    if (denom != 0.0) delta = 0.5 * (ym - yp) / denom;
    delta = std::clamp(delta, -0.5, 0.5);
    st.peak_angle = std::fmod(pd.grid[imax] + delta * h + kTwoPi, kTwoPi);
    st.peak_value = y0 - 0.25 * (ym - yp) * delta;
    return st;
}

int count_local_maxima(const PhaseDistribution& pd, double ratio, double rel_floor) {
    const std::size_t M = pd.size();
    const double lo = pd.min_value();
    const double hi = pd.max_value();
    const double threshold = std::max(ratio * lo, lo + rel_floor * (hi - lo));
    int count = 0;
    for (std::size_t i = 0; i < M; ++i) {
        const double prev = pd.values[(i + M - 1) % M];
        const double next = pd.values[(i + 1) % M];
        if (pd.values[i] > prev && pd.values[i] > next && pd.values[i] > threshold) ++count;
    }
    return count;
}

double circular_difference(double a, double b) {
    double d = std::fmod(a - b, kTwoPi);
    if (d <= -kPi) d += kTwoPi;
    if (d > kPi) d -= kTwoPi;
    return d;
}

} // namespace qnd::phasedist
