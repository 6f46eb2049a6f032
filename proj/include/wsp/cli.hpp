#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsp::cli {

inline constexpr const char* version = "1.0.0";

enum ExitCode : int {
    ok = 0,
    violations = 1, // violations found, or infeasible
    usage = 2,      // bad flags or unreadable / malformed input
    budget = 3,     // search node budget exhausted
};

/// Runs one command line (without the program name). All output goes to the
/// given streams; returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace wsp::cli
