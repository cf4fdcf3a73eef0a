#pragma once

namespace egg {

/// Elliptic modulus k with 0 <= k <= 1.
///
/// The modulus (not the parameter m = k^2) is used throughout the library.
/// Individual functions narrow the domain further: K and D reject k = 1.
class Modulus {
 public:
  explicit Modulus(double k);

  [[nodiscard]] double value() const { return k_; }
  [[nodiscard]] double complement() const;  // k' = sqrt(1 - k^2)

 private:
  double k_;
};

/// Complete elliptic integral of the first kind, K(k) = int_0^{pi/2} dθ / sqrt(1 - k² sin²θ).
/// Evaluated by the arithmetic-geometric mean. Throws DomainError for k = 1.
[[nodiscard]] double complete_K(Modulus k);

/// Complete elliptic integral of the second kind, E(k) = int_0^{pi/2} sqrt(1 - k² sin²θ) dθ.
/// AGM with the Gauss correction sum; E(1) = 1.
[[nodiscard]] double complete_E(Modulus k);

/// D(k) = (K(k) - E(k)) / k², continued by D(0) = π/4.
///
/// Below kDSeriesCutoff the power series is summed instead of forming the
/// difference, which loses relative accuracy like 1/k².
[[nodiscard]] double complete_D(Modulus k);

inline constexpr double kDSeriesCutoff = 0.25;

}  // namespace egg
