#pragma once

#include <string>
#include <vector>

namespace dc::cli {

inline constexpr const char* kSchemaVersion = "dc-report-1";

// Runs one CLI invocation; stdout payload is appended to `out`.
// Exit codes: 0 success, 2 domain error, 3 verification residual above tolerance.
int run_cli(const std::vector<std::string>& args, std::string& out);

}  // namespace dc::cli
