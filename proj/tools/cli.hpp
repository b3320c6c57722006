#pragma once

#include <iosfwd>

namespace errbounds::cli {

/// Process exit codes of the errbounds tool.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Parses argv and dispatches one subcommand: bounds, curves, classify,
/// verify, oracle or report-tightness. Reports go to `out`, diagnostics to
/// `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace errbounds::cli
