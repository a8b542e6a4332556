#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rwalk {

inline constexpr const char* kSchemaVersion = "1";

/// Runs the command line (args excludes the program name). Results go to
/// `out` (or the --out file), errors to `err` as a JSON object.
/// Exit codes: 0 success, 1 failed verification or method disagreement,
/// 2 invalid flags or parameters.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rwalk
