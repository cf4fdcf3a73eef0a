#include "egg/sweep.hpp"

namespace egg {

std::vector<CurveParams> random_curves(std::uint64_t seed, std::size_t count, Regime regime) {
  SplitMix64 rng(seed);
  std::vector<CurveParams> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double a = rng.uniform(1.0, 5.0);
    const double b = rng.uniform(0.5, 4.0);
    double ratio = 1.0;
    if (regime == Regime::WLessA) ratio = rng.uniform(0.1, 0.95);
    if (regime == Regime::WGreaterA) ratio = rng.uniform(1.05, 3.0);
    out.emplace_back(a, b, a * ratio);
  }
  return out;
}

std::vector<double> uniform_grid(double step, int count) {
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(count));
  // multiply rather than accumulate so 0.1 * 9 stays 0.9
  for (int i = 1; i <= count; ++i) g.push_back(step * i);
  return g;
}

}  // namespace egg
