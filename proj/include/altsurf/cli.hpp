#pragma once

#include <iosfwd>

namespace altsurf {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_invalid_input = 2,
  exit_precondition = 3,
  exit_budget_exhausted = 4,
};

/// Runs the `altsurf` command line. Reports go to `out` unless `--out` is
/// given; diagnostics go to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace altsurf
