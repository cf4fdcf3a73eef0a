#pragma once

#include <cstdint>
#include <vector>

#include "egg/curve.hpp"

namespace egg {

/// SplitMix64. Used instead of <random> distributions so that parameter
/// sweeps are bit-identical across standard library implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Pseudo-random curves with a in [1, 5), b in [0.5, 4) and w chosen so that
/// the regime is the requested one: w/a in [0.1, 0.95) for WLessA, in
/// [1.05, 3) for WGreaterA, w = a for Degenerate.
[[nodiscard]] std::vector<CurveParams> random_curves(std::uint64_t seed, std::size_t count,
                                                     Regime regime);

/// {step, 2 step, ..., count step}; e.g. grid(0.1, 9) = {0.1, ..., 0.9}.
[[nodiscard]] std::vector<double> uniform_grid(double step, int count);

}  // namespace egg
