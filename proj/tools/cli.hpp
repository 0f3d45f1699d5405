#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ptscatter::cli {

enum ExitCode : int { ok = 0, config_error = 2, solver_error = 3, threshold_exceeded = 4 };

/// Runs one subcommand (`scan`, `compare`, `symmetry`, `lattice`).  `args`
/// excludes the program name.  Output goes to --out when given, else to `out`;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptscatter::cli
