#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gft::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gft::cli
