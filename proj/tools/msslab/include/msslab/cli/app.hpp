#pragma once

#include <iosfwd>

namespace msslab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitFailure = 2,
  kExitBudget = 3,
};

/// Entry point behind the msslab binary. Reports go to `out` (or the -o
/// file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace msslab::cli
