#pragma once

#include <vector>

#include "egg/rational.hpp"

namespace egg {

/// Parameters of the cubic 2wxy² + b²x² + (a² + w²)y² - a²b² = 0.
///   a: semi-axis along x, b: semi-axis along y,
///   w: distance between the centres of the two construction circles.
class CurveParams {
 public:
  /// Throws DomainError unless a, b, w are finite and positive.
  CurveParams(double a, double b, double w);

  [[nodiscard]] double a() const { return a_; }
  [[nodiscard]] double b() const { return b_; }
  [[nodiscard]] double w() const { return w_; }

 private:
  double a_;
  double b_;
  double w_;
};

enum class Regime { WLessA, WGreaterA, Degenerate };

struct DerivedShape {
  double q;      // 1 for w <= a, a/w for w > a
  double k;      // q²w/a, in (0, 1]
  double u;      // abscissa of the extreme point, -q²w
  double gamma;  // -(a² + w²)/(2w), bound of the hyperbolic branch
  Regime regime;
};

struct PlanePoint {
  double x;
  double y;
};

[[nodiscard]] DerivedShape derive(const CurveParams& params);

/// Left side of the original cubic at p.
[[nodiscard]] double implicit_F(const CurveParams& params, PlanePoint p);

/// Left side of the q-unified cubic 2q²wxy² + q²b²x² + (a² + q⁴w²)y² - a²b²q².
[[nodiscard]] double implicit_Fq(const CurveParams& params, PlanePoint p);

/// Point of the egg oval at parameter t:
///   x(t) = -q²w sin²t + cos t sqrt(a² - q⁴w² sin²t),  y(t) = qb sin t.
/// t in [0, π] traces the upper half from (a, 0) to (-a, 0).
[[nodiscard]] PlanePoint point_at(const CurveParams& params, double t);

/// n >= 2 points on a uniform grid t_j = 2πj/(n-1); first and last are (a, 0).
[[nodiscard]] std::vector<PlanePoint> sample_egg(const CurveParams& params, int n);

/// The t grid used by sample_egg and construction_circles.
[[nodiscard]] std::vector<double> uniform_angles(int n);

struct ConstructionCircles {
  std::vector<PlanePoint> outer;  // centre origin, radius a
  std::vector<PlanePoint> inner;  // centre (-q²w, 0), radius qb
};

[[nodiscard]] ConstructionCircles construction_circles(const CurveParams& params, int n);

/// Exact check of the q-unification. With q chosen by regime, the four
/// coefficient ratios F_q : F must coincide, and (q² - 1)(q²w² - a²) = 0.
struct UnificationCheck {
  Rational q;
  Rational ratios[4];  // 2q²w/2w, q²b²/b², (a²+q⁴w²)/(a²+w²), a²b²q²/a²b²
  Rational product;    // (q² - 1)(q²w² - a²)

  [[nodiscard]] bool holds() const {
    return ratios[0] == ratios[1] && ratios[1] == ratios[2] && ratios[2] == ratios[3] &&
           product == 0;
  }
};

[[nodiscard]] UnificationCheck unification_check(const Rational& a, const Rational& b,
                                                 const Rational& w);

}  // namespace egg
