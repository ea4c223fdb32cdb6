#pragma once

#include <iosfwd>

namespace mgp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageOrParse = 1,   // bad arguments, malformed files, I/O failures
  kInvalidModel = 2,   // model validation errors
  kNumerical = 3,      // tolerance, quadrature or rejection-budget failures
  kChecksFailed = 4,   // report: a distribution check failed
};

/// Entry point of the `mgp` command; writes regular output to `out` and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mgp::cli
