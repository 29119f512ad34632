#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clans::cli {

/// Runs one CLI invocation (args excludes the program name).
/// Exit codes: 0 success, 1 usage error, 2 domain error, 3 internal
/// consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace clans::cli
