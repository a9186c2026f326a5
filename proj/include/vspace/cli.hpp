#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vspace {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitPass = 0,       // every requested property holds
    kExitViolation = 1,  // a mathematical violation was found (witness printed)
    kExitUsage = 2,      // usage, I/O or input-format error
};

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vspace
