#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p3::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kEngineDisagreement = 3 };

// Runs one command. `args` excludes the program name. Results go to `out`,
// diagnostics (one-line JSON errors, the claims summary) to `err`.
int execute(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace p3::cli
