// Minimal popen-based process runner for scripted CLI checks.
#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace lucasmod::testing {

struct ProcessResult {
  int exit_code = -1;
  std::string output;  // captured stdout
};

// Runs a shell command, capturing stdout. Pass `merge_stderr` to fold stderr
// into the captured stream; otherwise stderr is dropped.
inline ProcessResult run_command(const std::string& command, bool merge_stderr = false) {
  const std::string full = command + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(full.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("popen failed for: " + command);
  }
  ProcessResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace lucasmod::testing
