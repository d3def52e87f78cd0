#pragma once

#include <iosfwd>

namespace renorm {

enum ExitCode : int { kExitPass = 0, kExitFinding = 1, kExitUsage = 2 };

/// Entry point behind the renorm executable. Exit codes: 0 pass, 1 a check
/// failed or a runtime invariant broke, 2 usage / config / spec error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace renorm
