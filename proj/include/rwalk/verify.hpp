#pragma once

#include <string>
#include <vector>

namespace rwalk {

/// One row of a verification run.
struct CheckResult {
  std::string suite;
  std::string name;
  bool passed;
  std::string detail;
};

/// Suite names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

/// Runs a named invariant suite ("all" runs every suite in order).
/// Error(InvalidArgument) for an unknown name. Exceptions thrown by a check
/// are caught and reported as a failed row.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace rwalk
