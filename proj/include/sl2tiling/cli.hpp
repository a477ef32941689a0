#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2 {

// Exit codes of the command-line tool.
enum ExitCode : int { kClean = 0, kCheckFailed = 1, kInputError = 2 };

// `args` excludes the program name. Data goes to `out`, diagnostics to `err`;
// a file argument of "-" reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sl2
