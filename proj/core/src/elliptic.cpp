#include "egg/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "egg/error.hpp"
#include "egg/series.hpp"

namespace egg {
namespace {

constexpr double kAgmTolerance = 1e-16;
constexpr int kAgmMaxIterations = 64;

struct AgmResult {
  double mean;
  double correction;  // sum of 2^(n-1) c_n^2 over n >= 0
};

// AGM of (1, k') tracking the c_n = (a_{n-1} - b_{n-1}) / 2 terms needed
// for E. c_0 = k.
AgmResult agm(double k, double kc) {
  double a = 1.0;
  double b = kc;
  double c = k;
  double power = 0.5;
  double correction = power * c * c;
  for (int i = 0; i < kAgmMaxIterations; ++i) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    c = 0.5 * (a - b);
    power *= 2.0;
    correction += power * c * c;
    const bool done = std::abs(an - bn) < kAgmTolerance * an;
    a = an;
    b = bn;
    if (done) break;
  }
  return {0.5 * (a + b), correction};
}

}  // namespace

Modulus::Modulus(double k) : k_(k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("elliptic modulus must lie in [0, 1], got " + std::to_string(k));
  }
}

double Modulus::complement() const { return std::sqrt((1.0 - k_) * (1.0 + k_)); }

double complete_K(Modulus k) {
  if (k.value() >= 1.0) throw DomainError("K(k) diverges at k = 1");
  const auto r = agm(k.value(), k.complement());
  return std::numbers::pi / (2.0 * r.mean);
}

double complete_E(Modulus k) {
  if (k.value() == 1.0) return 1.0;
  const auto r = agm(k.value(), k.complement());
  const double K = std::numbers::pi / (2.0 * r.mean);
  return K * (1.0 - r.correction);
}

double complete_D(Modulus k) {
  if (k.value() >= 1.0) throw DomainError("D(k) diverges at k = 1");
  if (k.value() < kDSeriesCutoff) {
    return series_eval(SeriesTarget{SeriesKind::D}, k.value(), 1e-18).value;
  }
  const double k2 = k.value() * k.value();
  return (complete_K(k) - complete_E(k)) / k2;
}

}  // namespace egg
