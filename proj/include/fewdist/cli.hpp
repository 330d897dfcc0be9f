#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fewdist {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,        // bad flags, unparseable input
  kExitFailure = 2,      // an audit with holds = false, or a runtime error
  kExitInfeasible = 3,   // refused by a feasibility threshold
};

/// Runs `fewdist <args...>`; `args` excludes the program name.  Report output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fewdist
