#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bch::cli {

enum ExitCode : int { ok = 0, usage_error = 1, verification_failure = 2 };

/// Runs the command line `args` (without the program name). Documents go to
/// `out` unless --output is given, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bch::cli
