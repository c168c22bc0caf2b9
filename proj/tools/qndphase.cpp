// qndphase.cpp — command-line front end: figure presets, parameter sweeps,
// validation subcommands, CSV emission.
//
// Exit codes: 0 success, 1 validation failure, 2 configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qnd/errors.hpp"
#include "qnd/scenario.hpp"
#include "qnd/validate.hpp"

namespace {

using qnd::scenario::Scenario;
using qnd::scenario::StateKind;

struct RunFlags {
    std::string system = "harmonic";
    std::string state = "coherent";
    double alpha2 = 5.0;
    double theta0 = 0.0;
    double r1 = 0.0;
    double psi = 0.0;
    double chi = 0.0;
    double lambda = 0.0;
    double atom_alpha = 0.0;
    double atom_beta = 0.0;
    double theta_s = -0.5494;
    std::string pole = "north";
    double gamma0 = 0.0025;
    double omega = 1.0;
    double omega_c = 100.0;
    double temp = 0.0;
    double bath_r = 0.0;
    double bath_a = 0.0;
    std::vector<double> times;
    std::size_t grid = 1024;
    std::string preset;
    std::string out;
};

StateKind parse_state(const std::string& s) {
    if (s == "coherent") return StateKind::coherent;
    if (s == "squeezed-coherent") return StateKind::squeezed_coherent;
    if (s == "kerr") return StateKind::kerr;
    if (s == "squeezed-kerr") return StateKind::squeezed_kerr;
    if (s == "dicke") return StateKind::dicke;
    if (s == "atomic-coherent") return StateKind::atomic_coherent;
    if (s == "atomic-squeezed") return StateKind::atomic_squeezed;
    throw qnd::ConfigError("unknown state '" + s + "'");
}

qnd::systems::SystemSpec parse_system(const std::string& s, double omega, double lambda) {
    using qnd::systems::SystemSpec;
    if (s == "harmonic") return SystemSpec::harmonic(omega);
    if (s == "anharmonic") return SystemSpec::anharmonic(omega, lambda);
    if (s == "two-level" || s == "two_level") return SystemSpec::two_level(omega);
    throw qnd::ConfigError("unknown system '" + s + "'");
}

Scenario build_scenario(const RunFlags& f) {
    Scenario cfg;
    cfg.label = "cli";
    cfg.system = parse_system(f.system, f.omega, f.lambda);
    cfg.state.kind = parse_state(f.state);
    cfg.state.alpha2 = f.alpha2;
    cfg.state.theta0 = f.theta0;
    cfg.state.r1 = f.r1;
    cfg.state.squeeze_phase = f.psi;
    cfg.state.chi = f.chi;
    cfg.state.atom_alpha = f.atom_alpha;
    cfg.state.atom_beta = f.atom_beta;
    cfg.state.theta_s = f.theta_s;
    if (f.pole == "north") {
        cfg.state.pole = 0.5;
    } else if (f.pole == "south") {
        cfg.state.pole = -0.5;
    } else {
        throw qnd::ConfigError("--pole must be north or south");
    }
    cfg.bath = qnd::bath::BathParams::from_temperature(f.gamma0, f.omega_c, f.temp, f.bath_r,
                                                       f.bath_a);
    cfg.times = f.times.empty() ? std::vector<double>{0.1} : f.times;
    cfg.grid = f.grid;
    cfg.validate();
    return cfg;
}

int run_command(const RunFlags& f) {
    std::vector<Scenario> scenarios;
    if (!f.preset.empty()) {
        scenarios = qnd::scenario::preset(f.preset);
        for (auto& s : scenarios) s.grid = f.grid;
    } else {
        scenarios.push_back(build_scenario(f));
    }

    std::ofstream file;
    if (!f.out.empty()) {
        file.open(f.out);
        if (!file) throw qnd::ConfigError("cannot open output file '" + f.out + "'");
    }
    std::ostream& os = f.out.empty() ? std::cout : file;
    for (const auto& s : scenarios) qnd::scenario::run_scenario(s, os);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum phase distributions under QND dephasing in a squeezed thermal bath"};
    app.require_subcommand(1);

    RunFlags f;
    CLI::App* run = app.add_subcommand("run", "compute phase distributions and emit CSV");
    run->add_option("--system", f.system, "harmonic | anharmonic | two-level");
    run->add_option("--state", f.state,
                    "coherent | squeezed-coherent | kerr | squeezed-kerr | dicke | "
                    "atomic-coherent | atomic-squeezed");
    run->add_option("--alpha2", f.alpha2, "|alpha|^2 of the underlying coherent state");
    run->add_option("--theta0", f.theta0, "coherent phase theta_0 (radians)");
    run->add_option("--r1", f.r1, "system squeeze magnitude");
    run->add_option("--psi", f.psi, "system squeeze phase (psi or phi, radians)");
    run->add_option("--chi", f.chi, "Kerr phase chi");
    run->add_option("--lambda", f.lambda, "anharmonicity lambda");
    run->add_option("--atom-alpha", f.atom_alpha, "atomic coherent polar angle (radians)");
    run->add_option("--atom-beta", f.atom_beta, "atomic coherent azimuth (radians)");
    run->add_option("--theta-s", f.theta_s, "atomic squeeze parameter Theta (< 0)");
    run->add_option("--pole", f.pole, "north | south (atomic squeezed pole / Dicke level)");
    run->add_option("--gamma0", f.gamma0, "bath coupling gamma_0");
    run->add_option("--omega", f.omega, "system frequency omega");
    run->add_option("--omega-c", f.omega_c, "bath cutoff omega_c");
    run->add_option("--temp", f.temp, "bath temperature T (hbar = k_B = 1)");
    run->add_option("--bath-r", f.bath_r, "bath squeezing magnitude r");
    run->add_option("--bath-a", f.bath_a, "bath squeezing phase slope a");
    run->add_option("--time", f.times, "evolution time (repeatable)");
    run->add_option("--grid", f.grid, "angular grid size M");
    run->add_option("--preset", f.preset, "figure preset fig1..fig8 (overrides other flags)");
    run->add_option("--out", f.out, "output path (default stdout)");

    std::string suite = "all";
    CLI::App* validate = app.add_subcommand("validate", "run oracle comparison suites");
    validate->add_option("suite", suite, "bath | states | dualpath | all");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return run_command(f);
        if (validate->parsed()) {
            return qnd::validate::run_suite(suite, std::cout) ? 0 : 1;
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qnd::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
