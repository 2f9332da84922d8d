#pragma once

#include <iosfwd>

namespace torelli::cli {

enum ExitCode : int { Ok = 0, Negative = 1, BadInput = 2, Capped = 3 };

/// Parses argv (argv[0] is the program name), runs one verb and writes the
/// report to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torelli::cli
