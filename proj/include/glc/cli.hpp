#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace glc {

/// Exit statuses of the command-line front end.
enum ExitStatus { kExitOk = 0, kExitInput = 1, kExitUsage = 2, kExitComputation = 3 };

/// Runs `glc <command> <curve.json> [flags]`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glc
