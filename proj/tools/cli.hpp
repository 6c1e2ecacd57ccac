#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ldio::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kDegenerate = 3,
  kVerificationFailure = 4,
  kTrivial = 5,
  kEquationFails = 6,
  kCrossCheckFailure = 7,
};

/// Runs one invocation; args excludes the program name. Emissions go to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldio::cli
