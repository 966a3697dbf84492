#pragma once

#include <iosfwd>

namespace casimir::cli {

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 2,
  kNumericalFailure = 3,
};

/// Runs the command line tool with the given arguments. Results go to `out`
/// (or the --out file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
