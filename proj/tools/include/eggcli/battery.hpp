#pragma once

#include <optional>
#include <string>
#include <vector>

namespace egg::cli {

/// Outcome of one invariant check. `worst` is the largest observed error
/// (or smallest gap, for ordering checks) and `limit` the threshold it was
/// held to; exact checks report the number of mismatches against 0.
struct CheckResult {
  std::string name;
  int criterion = 0;  // 1..9 for the acceptance criteria, 0 for supporting checks
  bool passed = false;
  double worst = 0.0;
  double limit = 0.0;
  std::string detail;
};

struct BatteryOptions {
  /// Replaces the built-in tolerance of every tolerance-based check.
  /// Exact checks (rational equality, orderings) and ratio checks ignore it.
  std::optional<double> tol;
};

/// 1/π to 30 significant digits.
inline constexpr const char* kInvPiReference = "0.318309886183790671537767526745";

/// Fixed-seed, fixed-grid invariant suite over all library modules.
[[nodiscard]] std::vector<CheckResult> run_battery(const BatteryOptions& options = {});

}  // namespace egg::cli
