#include "qnd/validate.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <ostream>

#include "qnd/bath.hpp"
#include "qnd/errors.hpp"
#include "qnd/phasedist.hpp"
#include "qnd/scenario.hpp"
#include "qnd/states.hpp"

namespace qnd::validate {

namespace {

Check make_check(std::string name, double err, double tol) {
    return {std::move(name), err, tol, err < tol};
}

constexpr double kTGrid[6] = {0.01, 0.05, 0.1, 0.2, 0.5, 1.0};
constexpr double kRGrid[3] = {0.0, 1.0, 2.0};

// Max deviations of a density matrix from Hermitian / unit-trace / PSD.
struct DmChecks {
    double herm = 0.0;
    double trace = 0.0;
    double min_eig = 0.0;
};

DmChecks dm_checks(const systems::ReducedDensityMatrix& dm) {
    DmChecks out;
    const auto& e = dm.entries;
    out.herm = (e - e.adjoint()).cwiseAbs().maxCoeff();
    out.trace = std::abs(e.trace().real() - 1.0) - dm.trunc_error;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (e + e.adjoint()));
    out.min_eig = -es.eigenvalues().minCoeff();
    return out;
}

} // namespace

std::vector<Check> bath_suite() {
    std::vector<Check> checks;
    const double g0 = 0.0025;
    const double wc = 100.0;

    double eta_err = 0.0, gamma0_err = 0.0, gammaT_err = 0.0, gammaT_corner = 0.0;
    for (double r : kRGrid) {
        const auto zero = bath::BathParams::zero_t(g0, wc, r);
        const auto hot = bath::BathParams::high_t(g0, wc, 300.0, r);
        for (double t : kTGrid) {
            eta_err = std::max(eta_err,
                               std::abs(bath::eta_closed(zero, t) - bath::eta_quadrature(zero, t)));
            const double gz = bath::gamma_closed(zero, t);
            const double gzq = bath::gamma_quadrature(zero, t);
            gamma0_err = std::max(gamma0_err, std::abs(gz - gzq) / std::max(1.0, gz));
            const double gh = bath::gamma_closed(hot, t);
            const double ghq = bath::gamma_quadrature(hot, t);
            const double rel = std::abs(gh - ghq) / std::abs(ghq);
            // The coth -> 2T/w replacement inside the high-T form carries its
            // own error, peaking at w_c t = 1 (measured 3.1%); report the
            // short-time corner separately from the regime the form targets.
            if (t >= 0.05) {
                gammaT_err = std::max(gammaT_err, rel);
            } else {
                gammaT_corner = std::max(gammaT_corner, rel);
            }
        }
    }
    checks.push_back(make_check("eta closed vs quadrature (18-pt grid)", eta_err, 1e-8));
    checks.push_back(make_check("gamma closed vs quadrature, T=0", gamma0_err, 1e-7));
    checks.push_back(make_check("gamma closed vs quadrature, T=300, t >= 0.05", gammaT_err, 0.02));
    checks.push_back(make_check("gamma closed vs quadrature, T=300, t = 0.01 "
                                "(kernel-replacement error at w_c t = 1)",
                                gammaT_corner, 0.035));

    // r = 0 reduction to the plain thermal formula.
    double red_err = 0.0;
    for (double t : kTGrid) {
        const auto thermal = bath::BathParams::zero_t(g0, wc, 0.0);
        const double expect = g0 / (2.0 * std::numbers::pi) * std::log1p(wc * wc * t * t);
        red_err = std::max(red_err, std::abs(bath::gamma_closed(thermal, t) - expect));
    }
    checks.push_back(make_check("thermal-limit reduction (r=0)", red_err, 1e-15));

    // Strict monotonicity of gamma in t for the thermal bath.
    {
        const auto thermal = bath::BathParams::zero_t(g0, wc, 0.0);
        double worst = 1.0;
        double prev = bath::gamma_closed(thermal, 0.01);
        for (int i = 1; i < 100; ++i) {
            const double t = 0.01 + (1.0 - 0.01) * i / 99.0;
            const double g = bath::gamma_closed(thermal, t);
            worst = std::min(worst, g - prev);
            prev = g;
        }
        checks.push_back(make_check("gamma monotone in t (r=0, 100-pt grid)",
                                    worst > 0.0 ? 0.0 : 1.0, 0.5));
    }

    // eta is independent of T, r, a.
    {
        double dev = 0.0;
        const auto ref = bath::BathParams::zero_t(g0, wc, 0.0);
        const auto alt1 = bath::BathParams::high_t(g0, wc, 300.0, 2.0, 0.01);
        const auto alt2 = bath::BathParams::zero_t(g0, wc, 1.5, 0.02);
        for (double t : kTGrid) {
            dev = std::max(dev, std::abs(bath::eta_closed(ref, t) - bath::eta_closed(alt1, t)));
            dev = std::max(dev, std::abs(bath::eta_closed(ref, t) - bath::eta_closed(alt2, t)));
        }
        checks.push_back(make_check("eta independent of T, r, a", dev, 1e-18));
    }
    return checks;
}

std::vector<Check> states_suite() {
    std::vector<Check> checks;
    const auto push_dm = [&checks](const std::string& name,
                                   const systems::ReducedDensityMatrix& dm) {
        const auto c = dm_checks(dm);
        checks.push_back(make_check(name + ": hermiticity", c.herm, 1e-12));
        checks.push_back(make_check(name + ": trace", c.trace, 1e-10));
        checks.push_back(make_check(name + ": PSD (min eigenvalue)", c.min_eig, 1e-10));
    };

    const double amag = std::sqrt(5.0);
    push_dm("coherent", states::dm_from_coeffs(
                            states::coherent_coeffs({amag, 0.0}, states::poisson_dim(5.0)),
                            systems::Basis::number));
    push_dm("squeezed_coherent",
            states::squeezed_coherent_dm({amag, 0.0}, {0.5, 0.25 * std::numbers::pi}, 128));

    const auto kerr = states::kerr_coeffs({0.02, {amag, 0.0}}, states::poisson_dim(5.0));
    const auto sectors = states::su11_sectors_from_coeffs(kerr);
    {
        // Sector traces sum to one; each sector is PSD by construction.
        const double tr =
            sectors.even.entries.trace().real() + sectors.odd.entries.trace().real();
        checks.push_back(make_check("kerr sector traces sum", std::abs(tr - 1.0), 1e-10));
    }
    const auto sk = states::squeezed_kerr_coeffs({0.02, {amag, 0.0}}, {0.4, 0.0}, 128);
    checks.push_back(
        make_check("squeezed_kerr norm", std::abs(sk.coeffs.squaredNorm() - 1.0), 1e-10));

    push_dm("dicke", states::atomic_initial_dm(states::DickeParams{0.5}));
    push_dm("atomic_coherent",
            states::atomic_initial_dm(states::AtomicCoherentParams{0.25 * std::numbers::pi,
                                                                   0.25 * std::numbers::pi}));
    push_dm("atomic_squeezed",
            states::atomic_initial_dm(states::AtomicSqueezedParams{-0.5494, -0.5}));
    return checks;
}

std::vector<Check> dualpath_suite() {
    std::vector<Check> checks;
    const auto compare = [&checks](const std::string& name, const scenario::Scenario& cfg,
                                   const phasedist::AtomicClosedFormParams& cf) {
        double worst = 0.0;
        for (double t : cfg.times) {
            const auto general = scenario::evaluate_at(cfg, t);
            const auto closed =
                phasedist::atomic_closed_form(cf, cfg.system, cfg.bath, t, cfg.grid);
            for (std::size_t i = 0; i < general.size(); ++i) {
                worst = std::max(worst, std::abs(general.values[i] - closed.values[i]));
            }
        }
        checks.push_back(make_check(name, worst, 1e-12));
    };

    for (const auto& cfg : scenario::preset("fig6")) {
        phasedist::AtomicClosedFormParams cf;
        cf.variant = phasedist::AtomicVariant::coherent;
        cf.alpha = cfg.state.atom_alpha;
        cf.beta = cfg.state.atom_beta;
        compare("fig6 " + cfg.label, cfg, cf);
    }
    for (const auto& cfg : scenario::preset("fig7")) {
        phasedist::AtomicClosedFormParams cf;
        cf.variant = phasedist::AtomicVariant::squeezed_south;
        cf.theta_s = cfg.state.theta_s;
        compare("fig7 " + cfg.label, cfg, cf);
    }
    for (const auto& cfg : scenario::preset("fig8")) {
        phasedist::AtomicClosedFormParams cf;
        cf.variant = phasedist::AtomicVariant::squeezed_north;
        cf.theta_s = cfg.state.theta_s;
        compare("fig8 " + cfg.label, cfg, cf);
    }
    return checks;
}

bool run_suite(const std::string& name, std::ostream& os) {
    std::vector<Check> checks;
    if (name == "bath" || name == "all") {
        const auto c = bath_suite();
        checks.insert(checks.end(), c.begin(), c.end());
    }
    if (name == "states" || name == "all") {
        const auto c = states_suite();
        checks.insert(checks.end(), c.begin(), c.end());
    }
    if (name == "dualpath" || name == "all") {
        const auto c = dualpath_suite();
        checks.insert(checks.end(), c.begin(), c.end());
    }
    if (checks.empty()) {
        throw ConfigError("validate: unknown suite '" + name +
                          "' (expected bath|states|dualpath|all)");
    }

    bool all_pass = true;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << "  max_error=" << c.max_error
           << "  tolerance=" << c.tolerance << "\n";
        all_pass = all_pass && c.pass;
    }
    os << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    return all_pass;
}

} // namespace qnd::validate
