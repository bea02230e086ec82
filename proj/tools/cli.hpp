#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsat::cli {

/// Exit codes: 0 claim holds, 1 fails with witness, 2 unknown (budget),
/// 3 usage error, 4 input/output error.
enum ExitCode : int { holds = 0, fails = 1, unknown = 2, usage = 3, io_error = 4 };

/// Runs one command line (without the program name). The certificate goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsat::cli
