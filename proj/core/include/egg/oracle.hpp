#pragma once

#include <functional>
#include <stdexcept>

#include "egg/curve.hpp"

namespace egg::oracle {

// Brute-force quadrature of the defining integrals. Nothing in this
// namespace evaluates elliptic integrals or area formulas in closed form;
// it exists to check those closed forms independently.

enum class Rule { AdaptiveSimpson, GaussLegendre };

/// abs_tol >= 1e-15, 1 <= max_depth <= 60, gauss_points in [2, 64].
struct QuadratureSpec {
  double abs_tol = 1e-11;
  int max_depth = 40;
  Rule rule = Rule::AdaptiveSimpson;
  int gauss_points = 10;

  /// Throws std::invalid_argument when the invariants above are violated.
  void validate() const;
};

/// Raised when subdivision reaches max_depth before meeting abs_tol.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(double estimate, double error_bound);

  [[nodiscard]] double estimate() const { return estimate_; }
  [[nodiscard]] double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

using Integrand = std::function<double(double)>;

[[nodiscard]] double quad(const Integrand& f, double lo, double hi, const QuadratureSpec& spec = {});

enum class EllipticKind { K, E };

/// Quadrature of int_0^{π/2} (1 - k² sin²θ)^{∓1/2} dθ.
[[nodiscard]] double quad_elliptic(EllipticKind kind, double k, const QuadratureSpec& spec = {});

/// Quadrature of the three auxiliary integrals over [lo, hi]:
///   1: sin²t cos t
///   2: sin²t sqrt(1 - k² sin²t)
///   3: sin²t cos²t / sqrt(1 - k² sin²t)
/// On [0, π/2] these are I_1..I_3, on [π/2, π] they are J_1..J_3.
[[nodiscard]] double quad_auxiliary(int index, double k, double lo, double hi,
                                    const QuadratureSpec& spec = {});

enum class Derivative { Analytic, FiniteDifference };

/// x'(t) of the egg parametrization. The finite-difference path uses a
/// central difference with step 1e-6 and only exists to check the analytic one.
[[nodiscard]] double x_prime(const CurveParams& params, double t,
                             Derivative mode = Derivative::Analytic);

struct AreaQuadrature {
  double total;
  double part2;  // -2 int_0^{π/2} y x' dt
  double part1;  // -2 int_{π/2}^{π} y x' dt
};

/// Area enclosed by the egg oval as -2 int_0^π y(t) x'(t) dt, split at π/2.
[[nodiscard]] AreaQuadrature quad_area(const CurveParams& params, const QuadratureSpec& spec = {},
                                       Derivative mode = Derivative::Analytic);

}  // namespace egg::oracle
