// scenario.hpp — scenario configuration, figure presets, and CSV emission for
// the command-line front end.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qnd/phasedist.hpp"
#include "qnd/states.hpp"

namespace qnd::scenario {

enum class StateKind {
    coherent,
    squeezed_coherent,
    kerr,
    squeezed_kerr,
    dicke,
    atomic_coherent,
    atomic_squeezed,
};

const char* to_string(StateKind k);

// Initial-state selector plus every state parameter the CLI exposes; which
// fields matter depends on kind.
struct StateSelector {
    StateKind kind = StateKind::coherent;
    double alpha2 = 5.0;      // |alpha|^2
    double theta0 = 0.0;
    double r1 = 0.0;          // system squeeze magnitude
    double squeeze_phase = 0.0;  // psi (squeezed coherent) or phi (squeezed Kerr)
    double chi = 0.0;
    double atom_alpha = 0.0;
    double atom_beta = 0.0;
    double theta_s = -0.5494;
    double pole = 0.5;        // +-1/2; doubles as the Dicke level m
};

// One runnable configuration: system + state + bath + times + grid.
struct Scenario {
    std::string label;
    systems::SystemSpec system;
    StateSelector state;
    bath::BathParams bath;
    std::vector<double> times;
    std::size_t grid = 1024;

    void validate() const;
};

// Evolve the scenario's state to time t and evaluate its phase distribution.
phasedist::PhaseDistribution evaluate_at(const Scenario& cfg, double t);

// Emit one CSV block per time: a '#' comment block recording all parameters
// plus the computed eta(t), gamma(t) and trunc_error, then a theta,P (or
// phi,P) header and grid rows at 15 significant digits.
void run_scenario(const Scenario& cfg, std::ostream& os);

// Figure presets fig1..fig8, each a list of scenarios carrying exactly the
// published parameter values. Unknown names are ConfigErrors.
std::vector<Scenario> preset(const std::string& name);

// 15-significant-digit formatting used for all CSV payload values.
std::string format_value(double v);

} // namespace qnd::scenario
