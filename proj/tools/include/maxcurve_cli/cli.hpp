#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxcurve::cli {

enum ExitCode : int { ok = 0, math_failure = 1, usage_error = 2 };

/// Runs one command line (without the program name). Regular output goes to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxcurve::cli
