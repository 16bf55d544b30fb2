#pragma once

#include <string>
#include <vector>

namespace lacunaria::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kInconclusive = 3;

struct Output {
  int exit_code = kOk;
  std::string out;  // report (JSON or CSV), or help text
  std::string err;  // diagnostics and usage on errors
};

/// Runs one command line. args excludes the program name.
Output run(const std::vector<std::string>& args);

}  // namespace lacunaria::cli
