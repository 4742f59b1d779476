#pragma once

#include <iosfwd>

namespace polpoisson {

struct CliEnvironment {
  bool color = false;
};

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_input_error = 1, exit_verification_failure = 2 };

/// Runs one CLI invocation. Subcommands: validate, bracket, lbracket, field,
/// flow, verify, examples.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const CliEnvironment& env = {});

}  // namespace polpoisson
