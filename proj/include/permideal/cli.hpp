#pragma once

#include <iosfwd>

namespace permideal {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitCap = 3, kExitVerify = 4 };

/// Entry point of the command-line tool; all output goes to the given streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permideal
