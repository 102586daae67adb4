#pragma once

#include <ostream>

namespace nonext::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kEvaluationError = 3,
};

/// Declared spread above which the off-1 difference quotients of the
/// counterexample are reported as non-convergent.
inline constexpr double kOffOneSpreadThreshold = 1.0;

/// Full command-line entry point; returns one of ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nonext::cli
