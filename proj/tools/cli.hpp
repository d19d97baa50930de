#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kummerlab::cli {

/// Exit codes: 0 computed or verified, 1 failed check, 2 usage error.
enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Parses and executes one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kummerlab::cli
