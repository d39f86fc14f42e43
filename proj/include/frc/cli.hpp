#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frc {

// Process exit codes of the frc tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,  // violations under --strict
    kExitUsage = 2,       // parse or usage error
    kExitCap = 3,         // enumeration cap exceeded
    kExitInfeasible = 4,  // infeasible / unrepairable result requested as a scalar
};

// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frc
