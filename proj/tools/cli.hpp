#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drg::cli {

enum ExitCode : int { kOk = 0, kInfeasible = 1, kInputError = 2, kDataAbsent = 3 };

/// Runs one drgtool invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drg::cli
