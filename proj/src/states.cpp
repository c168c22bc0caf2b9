#include "qnd/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qnd/errors.hpp"
#include "qnd/specfun.hpp"

namespace qnd::states {

namespace {

using specfun::LogFactorialTable;
using std::complex;

constexpr double kLn2 = std::numbers::ln2_v<double>;

void check_dim(std::size_t N) {
    if (N < 1) throw DomainError("state generator: dimension must be >= 1");
    if (N > specfun::kNMax + 1) {
        throw CapacityError("state generator: dimension exceeds capacity " +
                            std::to_string(specfun::kNMax + 1));
    }
}

void check_squeeze(const SqueezeParams& s) {
    if (!(s.r1 >= kMinSqueeze)) {
        throw DomainError("squeeze magnitude r1 below the 1e-8 degeneracy guard; "
                          "use the unsqueezed generators for r1 -> 0");
    }
}

} // namespace

StateCoeffs coherent_coeffs(const CoherentParams& p, std::size_t N) {
    check_dim(N);
    if (!std::isfinite(p.alpha_mag) || p.alpha_mag < 0.0) {
        throw DomainError("coherent_coeffs: |alpha| must be finite and >= 0");
    }
    const auto& lf = LogFactorialTable::shared();
    StateCoeffs out;
    out.coeffs = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(N));
    double norm2 = 0.0;
    if (p.alpha_mag == 0.0) {
        out.coeffs(0) = 1.0;
        norm2 = 1.0;
    } else {
        const double lmag = std::log(p.alpha_mag);
        const double a2h = 0.5 * p.alpha_mag * p.alpha_mag;
        for (std::size_t n = 0; n < N; ++n) {
            const double mag = std::exp(static_cast<double>(n) * lmag - 0.5 * lf(n) - a2h);
            out.coeffs(static_cast<Eigen::Index>(n)) =
                std::polar(mag, static_cast<double>(n) * p.theta0);
            norm2 += mag * mag;
        }
    }
    out.tail_weight = std::max(0.0, 1.0 - norm2);
    return out;
}

StateCoeffs kerr_coeffs(const KerrParams& p, std::size_t N) {
    StateCoeffs out = coherent_coeffs(p.base, N);
    if (!std::isfinite(p.chi)) throw DomainError("kerr_coeffs: chi must be finite");
    if (p.chi != 0.0) {
        for (std::size_t n = 0; n < out.dim(); ++n) {
            const double dn = static_cast<double>(n);
            out.coeffs(static_cast<Eigen::Index>(n)) *=
                std::polar(1.0, -p.chi * dn * (dn - 1.0));
        }
    }
    return out;
}

std::complex<double> squeeze_matrix_element(std::size_t m, std::size_t p,
                                            const SqueezeParams& s) {
    check_squeeze(s);
    if ((m + p) % 2 != 0) return {0.0, 0.0};  // parity selection rule
    if (m > specfun::kNMax || p > specfun::kNMax) {
        throw CapacityError("squeeze_matrix_element: index exceeds capacity");
    }

    const bool even = (m % 2 == 0);
    const std::size_t M = m / 2;
    const std::size_t P = p / 2;
    const double th = std::tanh(s.r1);
    const double sh = std::sinh(s.r1);
    const double lcosh = std::log(std::cosh(s.r1));
    const double c = even ? 0.5 : 1.5;
    const double x = -1.0 / (sh * sh);

    const specfun::Scaled f =
        specfun::hyp2f1_terminating_scaled(static_cast<unsigned>(P), static_cast<unsigned>(M), c, x);
    if (f.mantissa == 0.0) return {0.0, 0.0};

    const auto& lf = LogFactorialTable::shared();
    // even:  (-1)^P / (P! M!) sqrt((2P)! (2M)! / cosh r1)  (tanh r1 / 2)^{M+P} 2F1
    // odd:   same with (2P+1)!, (2M+1)! and cosh^3 r1
    double lmag = -lf(P) - lf(M) + static_cast<double>(M + P) * std::log(0.5 * th);
    lmag += even ? 0.5 * (lf(2 * P) + lf(2 * M)) - 0.5 * lcosh
                 : 0.5 * (lf(2 * P + 1) + lf(2 * M + 1)) - 1.5 * lcosh;
    lmag += std::log(std::abs(f.mantissa)) + static_cast<double>(f.exponent2) * kLn2;

    double sign = (P % 2 == 0) ? 1.0 : -1.0;
    if (f.mantissa < 0.0) sign = -sign;
    const double ang = (static_cast<double>(M) - static_cast<double>(P)) * s.phase;
    return std::polar(sign * std::exp(lmag), ang);
}

StateCoeffs squeezed_kerr_coeffs(const KerrParams& p, const SqueezeParams& s,
                                 std::size_t N) {
    check_dim(N);
    check_squeeze(s);
    const StateCoeffs q = kerr_coeffs(p, N);
    StateCoeffs out;
    out.coeffs = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(N));
    double norm2 = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
        complex<double> acc{0.0, 0.0};
        for (std::size_t k = n % 2; k < N; k += 2) {
            acc += squeeze_matrix_element(n, k, s) * q.coeffs(static_cast<Eigen::Index>(k));
        }
        out.coeffs(static_cast<Eigen::Index>(n)) = acc;
        norm2 += std::norm(acc);
    }
    out.tail_weight = std::max(0.0, 1.0 - norm2);
    return out;
}

systems::ReducedDensityMatrix squeezed_coherent_dm(const CoherentParams& p,
                                                   const SqueezeParams& s, std::size_t N,
                                                   double* pre_norm_trace) {
    check_dim(N);
    check_squeeze(s);
    const auto& lf = LogFactorialTable::shared();

    const double th = std::tanh(s.r1);
    const double sinh2 = std::sinh(2.0 * s.r1);
    const complex<double> zh =
        std::polar(p.alpha_mag, p.theta0 - 0.5 * s.phase) / std::sqrt(sinh2);

    // rho_mn = K phi_m conj(phi_n) with
    //   phi_m = e^{i psi m / 2} (tanh r1 / 2)^{m/2} H_m(z_H) / sqrt(m!)
    //   K     = exp[-|alpha|^2 (1 - tanh r1 cos(2 theta0 - psi))] / cosh r1.
    // Magnitudes are carried in log space: H_m grows fast at large |z_H|.
    const double log_k = -p.alpha_mag * p.alpha_mag *
                             (1.0 - th * std::cos(2.0 * p.theta0 - s.phase)) -
                         std::log(std::cosh(s.r1));

    std::vector<double> lmag(N);
    std::vector<complex<double>> phase(N);
    for (std::size_t m = 0; m < N; ++m) {
        complex<double> unit;
        const specfun::Scaled h =
            specfun::hermite_scaled(static_cast<unsigned>(m), zh, &unit);
        lmag[m] = h.log_abs() + 0.5 * static_cast<double>(m) * std::log(0.5 * th) -
                  0.5 * lf(m);
        phase[m] = unit * std::polar(1.0, 0.5 * s.phase * static_cast<double>(m));
    }

    const double lmax = *std::max_element(lmag.begin(), lmag.end());
    if (!std::isfinite(lmax)) {
        throw NumericalError("squeezed_coherent_dm: degenerate amplitude vector");
    }
    Eigen::VectorXcd v(static_cast<Eigen::Index>(N));
    double norm2 = 0.0;
    for (std::size_t m = 0; m < N; ++m) {
        const double mag = std::exp(lmag[m] - lmax);
        v(static_cast<Eigen::Index>(m)) = mag * phase[m];
        norm2 += mag * mag;
    }
    if (pre_norm_trace != nullptr) {
        *pre_norm_trace = std::exp(log_k + 2.0 * lmax) * norm2;
    }

    v /= std::sqrt(norm2);
    systems::ReducedDensityMatrix dm;
    dm.entries = v * v.adjoint();
    dm.basis = systems::Basis::number;
    dm.t = 0.0;
    // Renormalized to unit trace; record the weight sitting in the top
    // coefficients as a truncation-quality bound.
    dm.trunc_error = std::norm(v(static_cast<Eigen::Index>(N - 1))) +
                     (N > 1 ? std::norm(v(static_cast<Eigen::Index>(N - 2))) : 0.0);
    return dm;
}

systems::ReducedDensityMatrix dm_from_coeffs(const StateCoeffs& c, systems::Basis basis) {
    systems::ReducedDensityMatrix dm;
    dm.entries = c.coeffs * c.coeffs.adjoint();
    dm.basis = basis;
    dm.t = 0.0;
    dm.trunc_error = c.tail_weight;
    return dm;
}

systems::Su11SectorPair su11_sectors_from_coeffs(const StateCoeffs& c) {
    const std::size_t N = c.dim();
    const std::size_t n_even = (N + 1) / 2;
    const std::size_t n_odd = N / 2;
    if (n_odd == 0) {
        throw DomainError("su11_sectors_from_coeffs: need at least 2 number states");
    }
    Eigen::VectorXcd ev(static_cast<Eigen::Index>(n_even));
    Eigen::VectorXcd od(static_cast<Eigen::Index>(n_odd));
    for (std::size_t m = 0; m < n_even; ++m) ev(static_cast<Eigen::Index>(m)) = c.coeffs(static_cast<Eigen::Index>(2 * m));
    for (std::size_t m = 0; m < n_odd; ++m) od(static_cast<Eigen::Index>(m)) = c.coeffs(static_cast<Eigen::Index>(2 * m + 1));

    systems::Su11SectorPair pair;
    pair.even.entries = ev * ev.adjoint();
    pair.even.basis = systems::Basis::su11_even;
    pair.even.trunc_error = std::max(0.0, 1.0 - pair.even.entries.trace().real());
    pair.odd.entries = od * od.adjoint();
    pair.odd.basis = systems::Basis::su11_odd;
    pair.odd.trunc_error = std::max(0.0, 1.0 - pair.odd.entries.trace().real());
    return pair;
}

systems::ReducedDensityMatrix atomic_initial_dm(const AtomicStateParams& p) {
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);

    if (const auto* d = std::get_if<DickeParams>(&p)) {
        if (d->m_tilde != 0.5 && d->m_tilde != -0.5) {
            throw DomainError("atomic_initial_dm: Dicke m must be +-1/2 for j = 1/2");
        }
        const Eigen::Index i = (d->m_tilde < 0.0) ? 0 : 1;
        rho(i, i) = 1.0;
    } else if (const auto* ac = std::get_if<AtomicCoherentParams>(&p)) {
        if (!(ac->alpha >= 0.0 && ac->alpha <= std::numbers::pi)) {
            throw DomainError("atomic_initial_dm: polar angle alpha must lie in [0, pi]");
        }
        // <j,m|alpha,beta> = sin^{j+m}(a/2) cos^{j-m}(a/2) e^{-i(j+m)beta}, j = 1/2
        Eigen::Vector2cd amp;
        amp(0) = std::cos(0.5 * ac->alpha);
        amp(1) = std::polar(std::sin(0.5 * ac->alpha), -ac->beta);
        rho = amp * amp.adjoint();
    } else {
        const auto& as = std::get<AtomicSqueezedParams>(p);
        if (!(as.theta_s < 0.0)) {
            throw DomainError("atomic_initial_dm: Theta must be negative "
                              "(exp(2 Theta) = tanh(2|zeta|) < 1)");
        }
        if (as.pole != 0.5 && as.pole != -0.5) {
            throw DomainError("atomic_initial_dm: pole index p must be +-1/2");
        }
        // <j,n|zeta,p> = A_p e^{n Theta} d^{1/2}_{np}(pi/2), A_p fixed by
        // normalization (equals 1/sqrt(cosh Theta) at j = 1/2).
        const double beta_rot = 0.5 * std::numbers::pi;
        Eigen::Vector2cd amp;
        amp(0) = std::exp(-0.5 * as.theta_s) * specfun::wigner_d(0.5, -0.5, as.pole, beta_rot);
        amp(1) = std::exp(0.5 * as.theta_s) * specfun::wigner_d(0.5, 0.5, as.pole, beta_rot);
        amp /= amp.norm();
        rho = amp * amp.adjoint();
    }

    systems::ReducedDensityMatrix dm;
    dm.entries = rho;
    dm.basis = systems::Basis::dicke_j_half;
    dm.t = 0.0;
    dm.trunc_error = 0.0;
    return dm;
}

double zeta_magnitude_from_theta(double theta_s) {
    if (!(theta_s < 0.0)) {
        throw DomainError("zeta_magnitude_from_theta: Theta must be negative");
    }
    return 0.5 * std::atanh(std::exp(2.0 * theta_s));
}

std::size_t poisson_dim(double alpha2, double eps) {
    if (!(alpha2 >= 0.0)) throw DomainError("poisson_dim: |alpha|^2 must be >= 0");
    const auto& lf = LogFactorialTable::shared();
    if (alpha2 == 0.0) return 1;
    // Walk the Poisson(alpha2) tail downward from the full capacity.
    double tail = 0.0;
    const double la = std::log(alpha2);
    for (std::size_t n = specfun::kNMax;; --n) {
        tail += std::exp(static_cast<double>(n) * la - lf(n) - alpha2);
        if (tail >= eps || n == 0) {
            return std::min<std::size_t>(n + 1, specfun::kNMax + 1);
        }
    }
}

} // namespace qnd::states
