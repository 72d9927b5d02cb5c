#pragma once

#include <ostream>

namespace lpi::cli {

enum ExitCode : int { kOk = 0, kFails = 1, kUsage = 2, kEngine = 3 };

/// Runs the `lpi` command line; reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpi::cli
