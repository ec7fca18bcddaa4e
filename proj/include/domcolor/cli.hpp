#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domcolor::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,           // bad flags, malformed graph, out-of-range parameters
    kCounterexample = 3,  // a checked relation failed (survey, family-check, bounds, reduce)
    kInconclusive = 4,    // the node ceiling was reached
};

/// Runs `domcolor <args...>` (args excludes the program name). Machine output
/// goes to `out` as JSON lines, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domcolor::cli
