#pragma once

#include <iosfwd>

namespace seqtrial::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 2, kNumericalFailure = 3 };

// Runs one command-line invocation, writing results to `out` (or to --out)
// and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seqtrial::cli
