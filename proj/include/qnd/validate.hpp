// validate.hpp — oracle comparison suites behind the `validate` CLI command.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qnd::validate {

struct Check {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Closed-form bath kernels against the quadrature oracles on the
// (t, r) grid, plus the thermal-limit and monotonicity properties.
std::vector<Check> bath_suite();

// Hermiticity / trace / positive-semidefiniteness of every state generator
// at the figure parameters.
std::vector<Check> states_suite();

// Two-level general evaluation against the three closed forms, pointwise.
std::vector<Check> dualpath_suite();

// Runs the named suite ("bath", "states", "dualpath" or "all"), prints one
// line per check with its max error, and returns true iff everything passed.
bool run_suite(const std::string& name, std::ostream& os);

} // namespace qnd::validate
