#pragma once

#include <ostream>
#include <span>
#include <string>

namespace mdim::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFails = 1,
  kUsageError = 2,
  kCapExhausted = 3,
};

inline constexpr const char* kSchemaVersion = "1";

// Runs one invocation. args excludes the program name. The output document
// goes to `out` (or to --output), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mdim::cli
