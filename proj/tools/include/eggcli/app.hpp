#pragma once

#include <string>
#include <vector>

namespace egg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain error or failed verification
inline constexpr int kExitUsage = 2;

struct Result {
  int code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one eggcalc invocation. `args` excludes the program name.
[[nodiscard]] Result run(const std::vector<std::string>& args);

}  // namespace egg::cli
