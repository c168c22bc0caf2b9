#include "qnd/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "qnd/errors.hpp"
#include "qnd/specfun.hpp"

namespace qnd::scenario {

namespace {

using bath::BathParams;
using systems::SystemSpec;

bool is_atomic(StateKind k) {
    return k == StateKind::dicke || k == StateKind::atomic_coherent ||
           k == StateKind::atomic_squeezed;
}

bool is_su11(StateKind k) {
    return k == StateKind::kerr || k == StateKind::squeezed_kerr;
}

// Dimension for the squeezed oscillator families: squeezing spreads the
// photon-number support, so use the full capacity.
constexpr std::size_t kSqueezedDim = specfun::kNMax;

states::AtomicStateParams atomic_params(const StateSelector& st) {
    switch (st.kind) {
        case StateKind::dicke:
            return states::DickeParams{st.pole};
        case StateKind::atomic_coherent:
            return states::AtomicCoherentParams{st.atom_alpha, st.atom_beta};
        case StateKind::atomic_squeezed:
            return states::AtomicSqueezedParams{st.theta_s, st.pole};
        default:
            throw ConfigError("not an atomic state");
    }
}

} // namespace

const char* to_string(StateKind k) {
    switch (k) {
        case StateKind::coherent: return "coherent";
        case StateKind::squeezed_coherent: return "squeezed_coherent";
        case StateKind::kerr: return "kerr";
        case StateKind::squeezed_kerr: return "squeezed_kerr";
        case StateKind::dicke: return "dicke";
        case StateKind::atomic_coherent: return "atomic_coherent";
        case StateKind::atomic_squeezed: return "atomic_squeezed";
    }
    return "?";
}

void Scenario::validate() const {
    system.validate();
    bath.validate();
    if (grid < 8) throw ConfigError("Scenario: grid must have at least 8 points");
    if (times.empty()) throw ConfigError("Scenario: at least one time is required");
    for (double t : times) {
        if (!(t >= 0.0)) throw ConfigError("Scenario: times must be >= 0");
        if (t != 0.0 && !(t > 2.0 * bath.a)) {
            throw ConfigError("Scenario: every nonzero time must satisfy t > 2a for the "
                              "closed-form bath kernels");
        }
    }
    const bool atomic = is_atomic(state.kind);
    const bool su11 = is_su11(state.kind);
    if (atomic != (system.kind == systems::SystemKind::two_level)) {
        throw ConfigError("Scenario: atomic states require the two_level system and vice versa");
    }
    if (su11 != (system.kind == systems::SystemKind::anharmonic)) {
        throw ConfigError("Scenario: Kerr-family states require the anharmonic system "
                          "and vice versa");
    }
}

phasedist::PhaseDistribution evaluate_at(const Scenario& cfg, double t) {
    cfg.validate();
    const StateSelector& st = cfg.state;
    const double amag = std::sqrt(st.alpha2);

    phasedist::PhaseDistribution pd;
    switch (st.kind) {
        case StateKind::coherent: {
            const auto c = states::coherent_coeffs({amag, st.theta0}, states::poisson_dim(st.alpha2));
            const auto rho = systems::propagate(states::dm_from_coeffs(c, systems::Basis::number),
                                                cfg.system, cfg.bath, t);
            pd = phasedist::oscillator_phase_distribution(rho, cfg.grid);
            break;
        }
        case StateKind::squeezed_coherent: {
            const auto dm = states::squeezed_coherent_dm({amag, st.theta0},
                                                         {st.r1, st.squeeze_phase}, kSqueezedDim);
            pd = phasedist::oscillator_phase_distribution(
                systems::propagate(dm, cfg.system, cfg.bath, t), cfg.grid);
            break;
        }
        case StateKind::kerr: {
            // at least two number states so both sectors exist
            const auto q = states::kerr_coeffs({st.chi, {amag, st.theta0}},
                                               std::max<std::size_t>(2, states::poisson_dim(st.alpha2)));
            const auto pair = systems::propagate(states::su11_sectors_from_coeffs(q),
                                                 cfg.system, cfg.bath, t);
            pd = phasedist::oscillator_phase_distribution(pair, cfg.grid);
            break;
        }
        case StateKind::squeezed_kerr: {
            const auto sck = states::squeezed_kerr_coeffs({st.chi, {amag, st.theta0}},
                                                          {st.r1, st.squeeze_phase}, kSqueezedDim);
            const auto pair = systems::propagate(states::su11_sectors_from_coeffs(sck),
                                                 cfg.system, cfg.bath, t);
            pd = phasedist::oscillator_phase_distribution(pair, cfg.grid);
            break;
        }
        default: {
            const auto rho = systems::propagate(states::atomic_initial_dm(atomic_params(st)),
                                                cfg.system, cfg.bath, t);
            pd = phasedist::atomic_phase_distribution_general(rho, cfg.grid);
            break;
        }
    }

    pd.info.system = (cfg.system.kind == systems::SystemKind::harmonic)     ? "harmonic"
                     : (cfg.system.kind == systems::SystemKind::anharmonic) ? "anharmonic"
                                                                            : "two_level";
    pd.info.state = to_string(st.kind);
    pd.info.bath = "gamma0=" + format_value(cfg.bath.gamma0) +
                   " omega_c=" + format_value(cfg.bath.omega_c) +
                   " T=" + format_value(cfg.bath.temperature) + " r=" + format_value(cfg.bath.r) +
                   " a=" + format_value(cfg.bath.a);
    pd.info.t = t;
    return pd;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void run_scenario(const Scenario& cfg, std::ostream& os) {
    cfg.validate();
    const bool atomic = is_atomic(cfg.state.kind);
    for (double t : cfg.times) {
        const auto pd = evaluate_at(cfg, t);
        const auto [eta, gamma] = bath::kernels_for_time(cfg.bath, t);

        // Truncation weight actually realized in the emitted distribution.
        const double trunc = std::max(0.0, 1.0 - pd.integral());

        if (!cfg.label.empty()) os << "# series: " << cfg.label << "\n";
        os << "# system=" << pd.info.system << " omega=" << format_value(cfg.system.omega)
           << " lambda=" << format_value(cfg.system.lambda) << "\n";
        os << "# state=" << to_string(cfg.state.kind)
           << " alpha2=" << format_value(cfg.state.alpha2)
           << " theta0=" << format_value(cfg.state.theta0)
           << " r1=" << format_value(cfg.state.r1)
           << " squeeze_phase=" << format_value(cfg.state.squeeze_phase)
           << " chi=" << format_value(cfg.state.chi)
           << " atom_alpha=" << format_value(cfg.state.atom_alpha)
           << " atom_beta=" << format_value(cfg.state.atom_beta)
           << " theta_s=" << format_value(cfg.state.theta_s)
           << " pole=" << format_value(cfg.state.pole) << "\n";
        os << "# bath gamma0=" << format_value(cfg.bath.gamma0)
           << " omega_c=" << format_value(cfg.bath.omega_c)
           << " T=" << format_value(cfg.bath.temperature)
           << " r=" << format_value(cfg.bath.r) << " a=" << format_value(cfg.bath.a)
           << " regime="
           << (cfg.bath.regime == bath::Regime::zero_temperature ? "zero_temperature"
                                                                 : "high_temperature")
           << "\n";
        os << "# t=" << format_value(t) << " eta=" << format_value(eta)
           << " gamma=" << format_value(gamma) << " trunc_error=" << format_value(trunc)
           << " grid=" << pd.size() << "\n";
        os << (atomic ? "phi,P\n" : "theta,P\n");
        for (std::size_t i = 0; i < pd.size(); ++i) {
            os << format_value(pd.grid[i]) << "," << format_value(pd.values[i]) << "\n";
        }
    }
}

namespace {

Scenario base_oscillator(StateKind kind, const BathParams& b, double t,
                         const std::string& label) {
    Scenario s;
    s.label = label;
    s.system = SystemSpec::harmonic(1.0);
    s.state.kind = kind;
    s.state.alpha2 = 5.0;
    s.state.theta0 = 0.0;
    s.bath = b;
    s.times = {t};
    return s;
}

// Shared figure-wide constants: omega = 1, omega_c = 100, |alpha|^2 = 5,
// a = 0, theta0 = 0.
constexpr double kOmegaC = 100.0;

BathParams bath_at(double gamma0, double T, double r) {
    return BathParams::from_temperature(gamma0, kOmegaC, T, r, 0.0);
}

} // namespace

std::vector<Scenario> preset(const std::string& name) {
    std::vector<Scenario> out;

    const auto harmonic_family = [&out](StateKind kind, double r1, double psi) {
        const double g0 = 0.0025;
        const char* names[5] = {"unitary", "T0_r2_t0.1", "T300_r2_t0.1", "T300_r1_t0.1",
                                "T300_r1_t0.2"};
        const BathParams baths[5] = {bath_at(0.0, 0.0, 0.0), bath_at(g0, 0.0, 2.0),
                                     bath_at(g0, 300.0, 2.0), bath_at(g0, 300.0, 1.0),
                                     bath_at(g0, 300.0, 1.0)};
        const double times[5] = {0.1, 0.1, 0.1, 0.1, 0.2};
        for (int i = 0; i < 5; ++i) {
            Scenario s = base_oscillator(kind, baths[i], times[i], names[i]);
            s.state.r1 = r1;
            s.state.squeeze_phase = psi;
            out.push_back(std::move(s));
        }
    };

    const auto anharmonic = [](StateKind kind, const BathParams& b, double t,
                               const std::string& label, double r1, double phi) {
        Scenario s = base_oscillator(kind, b, t, label);
        s.system = SystemSpec::anharmonic(1.0, 0.02);
        s.state.chi = 0.02;
        s.state.r1 = r1;
        s.state.squeeze_phase = phi;
        return s;
    };

    const auto atomic = [](StateKind kind, const BathParams& b, double t,
                           const std::string& label) {
        Scenario s;
        s.label = label;
        s.system = SystemSpec::two_level(1.0);
        s.state.kind = kind;
        s.state.atom_alpha = 0.25 * std::numbers::pi;
        s.state.atom_beta = 0.25 * std::numbers::pi;
        s.state.theta_s = -0.5494;
        s.bath = b;
        s.times = {t};
        return s;
    };

    if (name == "fig1") {
        harmonic_family(StateKind::coherent, 0.0, 0.0);
    } else if (name == "fig2") {
        harmonic_family(StateKind::squeezed_coherent, 0.5, 0.25 * std::numbers::pi);
    } else if (name == "fig3") {
        const double g0 = 0.0025;
        out.push_back(anharmonic(StateKind::kerr, bath_at(0.0, 0.0, 0.0), 0.1, "unitary", 0, 0));
        out.push_back(anharmonic(StateKind::kerr, bath_at(g0, 50.0, 0.0), 0.1, "T50_r0", 0, 0));
        out.push_back(anharmonic(StateKind::kerr, bath_at(g0, 50.0, 2.0), 0.1, "T50_r2", 0, 0));
        out.push_back(anharmonic(StateKind::kerr, bath_at(g0, 0.0, 2.0), 0.1, "T0_r2", 0, 0));
    } else if (name == "fig4") {
        Scenario s = anharmonic(StateKind::kerr, bath_at(0.0025, 0.0, 2.0), 0.1, "T0_r2", 0, 0);
        s.times = {0.1, 0.5, 1.0};
        out.push_back(std::move(s));
    } else if (name == "fig5") {
        const double g0 = 0.025;
        out.push_back(anharmonic(StateKind::squeezed_kerr, bath_at(0.0, 0.0, 0.0), 0.1,
                                 "unitary", 0.4, 0.0));
        out.push_back(anharmonic(StateKind::squeezed_kerr, bath_at(g0, 0.0, 1.0), 0.1,
                                 "T0_r1", 0.4, 0.0));
        out.push_back(anharmonic(StateKind::squeezed_kerr, bath_at(g0, 100.0, 1.0), 0.1,
                                 "T100_r1", 0.4, 0.0));
        out.push_back(anharmonic(StateKind::squeezed_kerr, bath_at(g0, 100.0, 0.0), 0.1,
                                 "T100_r0", 0.4, 0.0));
    } else if (name == "fig6") {
        const double g0 = 0.025;
        out.push_back(atomic(StateKind::atomic_coherent, bath_at(g0, 0.0, 0.0), 0.1, "T0_r0_t0.1"));
        out.push_back(atomic(StateKind::atomic_coherent, bath_at(g0, 0.0, 2.0), 0.1, "T0_r2_t0.1"));
        out.push_back(atomic(StateKind::atomic_coherent, bath_at(g0, 300.0, 2.0), 0.1,
                             "T300_r2_t0.1"));
        out.push_back(atomic(StateKind::atomic_coherent, bath_at(g0, 300.0, 2.0), 0.02,
                             "T300_r2_t0.02"));
    } else if (name == "fig7" || name == "fig8") {
        const double g0 = 0.025;
        const double pole = (name == "fig7") ? -0.5 : 0.5;
        const char* names[3] = {"T0_t0.1", "T300_t0.1", "T300_t0.05"};
        const BathParams baths[3] = {bath_at(g0, 0.0, 1.0), bath_at(g0, 300.0, 1.0),
                                     bath_at(g0, 300.0, 1.0)};
        const double times[3] = {0.1, 0.1, 0.05};
        for (int i = 0; i < 3; ++i) {
            Scenario s = atomic(StateKind::atomic_squeezed, baths[i], times[i], names[i]);
            s.state.pole = pole;
            out.push_back(std::move(s));
        }
    } else {
        throw ConfigError("unknown preset '" + name + "' (expected fig1..fig8)");
    }
    return out;
}

} // namespace qnd::scenario
