#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lukfre {

enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 1,
  kExitInputError = 2,
  kExitAuditFailure = 3,
};

// Entry point behind the `lukfre` binary. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lukfre
