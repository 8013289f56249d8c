#pragma once

#include <iosfwd>

namespace digitop::cli {

enum Exit { kHolds = 0, kFails = 1, kUsage = 2, kUnknown = 3 };

/// Runs one command line. Reports go to `out` (or -o), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace digitop::cli
