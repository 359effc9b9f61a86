#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rook::cli {

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsage = 2, kCapRefused = 3 };

/// Runs one invocation; args excludes the program name. Results go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rook::cli
