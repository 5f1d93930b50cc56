#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace totref::cli {

/// Runs one command (args exclude the program name) and writes reports to
/// `out`, diagnostics to `err`.
///
/// Exit codes: 0 pass/yes, 1 fail/no, 2 input error, 3 inconclusive,
/// 4 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace totref::cli
