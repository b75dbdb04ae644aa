#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadproj::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDomainError = 2,
  kVerificationFailed = 3,
};

/// Runs one command line (args excludes the program name). Normal output goes
/// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed 17-significant-digit rendering used in all CSV output; −0 prints as 0.
std::string format_number(double value);

}  // namespace quadproj::cli
