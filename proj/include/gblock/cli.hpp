#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gblock::cli {

// Exit statuses of the command-line tool.
enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

// Runs one command line (args excludes the program name) and returns the exit
// status. Normal output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "a..b" (inclusive) or a single integer.
std::vector<int> parse_range(const std::string& text);

}  // namespace gblock::cli
