#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetakit::cli {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitNumeric = 3 };

// Runs one command line, program name excluded: {"eval", "--scheme", ...}.
// Records go to `out`, diagnostics to `err`. Returns the process exit code.
// ZETAKIT_BITS is read from the environment when --bits is absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetakit::cli
