#pragma once

#include <iosfwd>

namespace frabessel {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSelftestFailed = 1;
inline constexpr int kExitDomain = 2;  // bad parameters or usage
inline constexpr int kExitAccuracy = 3;

/// Runs `frabessel eval|table|selftest ...` with the given streams.
/// Option precedence: command line, then --config file (key=value lines),
/// then FRABESSEL_TOL for the tolerance, then built-in defaults.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frabessel
