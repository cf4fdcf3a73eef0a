#pragma once

#include <optional>
#include <string>
#include <vector>

#include "egg/rational.hpp"
#include "egg/series.hpp"

namespace egg {

enum class ApproxKind { First, Second };

/// One polynomial coefficient. Exact when it can be written as r + s·π;
/// otherwise (second-kind corrections at a generic endpoint) only `numeric`
/// is meaningful.
struct Coefficient {
  std::optional<PiLinear> exact;
  double numeric = 0.0;

  static Coefficient from_exact(PiLinear v) {
    const double d = v.value();
    return {std::move(v), d};
  }
  static Coefficient from_double(double v) { return {std::nullopt, v}; }

  [[nodiscard]] bool is_exact() const { return exact.has_value(); }
  [[nodiscard]] std::string to_string() const;
};

/// Polynomial enclosure of a series-defined function, anchored at 0.
///
/// First kind: the Maclaurin polynomial of degree n (only even powers are
/// ever nonzero). Second kind: T_{n-1} plus (x/β)^n (f(β) - T_{n-1}(β)), which
/// interpolates f at the endpoint β; for n = 0 it is the constant f(β).
class TaylorApprox {
 public:
  [[nodiscard]] const SeriesTarget& target() const { return target_; }
  [[nodiscard]] ApproxKind kind() const { return kind_; }
  [[nodiscard]] unsigned degree() const { return degree_; }
  [[nodiscard]] double anchor() const { return 0.0; }
  /// Endpoint β (second kind) or the radius of convergence (first kind).
  [[nodiscard]] double beta() const { return beta_; }

  /// Coefficients of x^0 .. x^degree.
  [[nodiscard]] const std::vector<Coefficient>& coefficients() const { return coeffs_; }

  /// Horner evaluation. Throws DomainError outside |x| <= β (second kind) or
  /// the convergence interval (first kind).
  [[nodiscard]] double eval(double x) const;
  [[nodiscard]] double operator()(double x) const { return eval(x); }

 private:
  friend TaylorApprox first_taylor(const SeriesTarget&, unsigned);
  friend TaylorApprox second_taylor(const SeriesTarget&, unsigned, double);

  TaylorApprox(SeriesTarget target, ApproxKind kind, unsigned degree, double beta,
               std::vector<Coefficient> coeffs)
      : target_(target), kind_(kind), degree_(degree), beta_(beta), coeffs_(std::move(coeffs)) {}

  SeriesTarget target_;
  ApproxKind kind_;
  unsigned degree_;
  double beta_;
  std::vector<Coefficient> coeffs_;
};

/// β used for K and D when a caller asks for the (divergent) endpoint 1.
inline constexpr double kDivergentEndpointBeta = 0.999999;

[[nodiscard]] TaylorApprox first_taylor(const SeriesTarget& target, unsigned n);

/// β must lie in (0, 1); β = 1 is accepted for E and Area (exact endpoint
/// values) and is replaced by kDivergentEndpointBeta for K and D.
[[nodiscard]] TaylorApprox second_taylor(const SeriesTarget& target, unsigned n, double beta);

/// Direction of the enclosure. For K and D the first-kind polynomials grow
/// toward f from below; for E and Area they fall toward f from above.
[[nodiscard]] bool first_kind_is_lower(SeriesKind kind);

struct ChainViolation {
  double x;
  std::string relation;  // e.g. "T_4 <= T_6"
  double excess;         // amount by which the inequality fails
};

struct ChainPoint {
  double x;
  double f;
  std::vector<double> first;   // T_0(x) .. T_max(x)
  std::vector<double> second;  // 𝕋_0(x) .. 𝕋_max(x)
  double first_margin;         // |f - T_max|
  double second_margin;        // |𝕋_max - f|
};

struct ChainReport {
  SeriesKind kind;
  unsigned max_degree;
  double beta;
  std::vector<ChainPoint> points;
  std::vector<ChainViolation> violations;
  double slack;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

inline constexpr double kChainSlack = 1e-14;

/// Checks the full interleaving
///   T_0 <= T_2 <= ... <= T_max <= f <= 𝕋_max <= ... <= 𝕋_1 <= 𝕋_0
/// (reversed for E and Area) at every grid point, with every adjacent pair
/// compared. Grid points must lie in (0, β].
[[nodiscard]] ChainReport verify_chain(const SeriesTarget& target, unsigned max_degree,
                                       double beta, const std::vector<double>& grid,
                                       double slack = kChainSlack);

}  // namespace egg
