#pragma once

// Command-line front end. run() never writes to the process streams; the
// caller prints output and diagnostics, which keeps it testable.

#include <string>
#include <vector>

namespace theta::cli {

enum class Status { kOk, kError };

struct CommandResult {
  Status status = Status::kOk;
  std::string output;                    // text or serialized JSON, newline terminated
  std::vector<std::string> diagnostics;  // notes and error messages, for stderr
  int exit_code = 0;                     // 0 ok, 1 usage error, 2 domain error
};

/// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace theta::cli
