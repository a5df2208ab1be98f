#pragma once

#include <ostream>

namespace dreg {

// Exit codes of run_command.
enum ExitCode : int {
  kExitOk = 0,
  kExitIrregular = 1,
  kExitInconclusive = 2,
  kExitUsage = 3,
  kExitResource = 4,
};

// Entry point of the dreg tool: dreg <rank|init|sing|support|irrdiv|regular|oracle> FILE [options].
// The report goes to `out` (or the --out file), diagnostics to `err`.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dreg
