// Helpers shared by the CLI-facing test binaries.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace testsupport {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

inline std::string cli_path() {
  const char* path = std::getenv("CONVEXCERT_CLI");
  if (path == nullptr || *path == '\0') {
    throw std::runtime_error("CONVEXCERT_CLI is not set; run through ctest");
  }
  return path;
}

/// Runs the CLI with the given argument string. stderr is captured along
/// with stdout when merge_stderr is set, discarded otherwise.
inline CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string command = "'" + cli_path() + "' " + args +
                              (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("popen failed for: " + command);
  }
  CliResult result;
  char buffer[4096];
  std::size_t count = 0;
  while ((count = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, count);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace testsupport
