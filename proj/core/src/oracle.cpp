#include "egg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "egg/error.hpp"

namespace egg::oracle {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kInitialPanels = 4;

struct Accumulator {
  double error = 0.0;
  bool exhausted = false;
};

// Below this, |delta| is rounding noise and further bisection cannot help.
bool at_rounding_floor(double delta, double estimate) {
  return std::abs(delta) <= 64.0 * kEps * std::abs(estimate);
}

class AdaptiveSimpson {
 public:
  AdaptiveSimpson(const Integrand& f, Accumulator& acc) : f_(f), acc_(acc) {}

  double run(double a, double b, double tol, int depth) {
    const double fa = f_(a);
    const double fm = f_(0.5 * (a + b));
    const double fb = f_(b);
    return step(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, depth);
  }

 private:
  double step(double a, double b, double fa, double fm, double fb, double whole, double tol,
              int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f_(lm);
    const double frm = f_(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    const double refined = left + right + delta / 15.0;
    if (std::abs(delta) <= 15.0 * tol || at_rounding_floor(delta, refined)) {
      acc_.error += std::abs(delta) / 15.0;
      return refined;
    }
    if (depth <= 0) {
      acc_.exhausted = true;
      acc_.error += std::abs(delta) / 15.0;
      return refined;
    }
    return step(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           step(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  }

  const Integrand& f_;
  Accumulator& acc_;
};

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

GaussRule gauss_legendre_rule(int n) {
  GaussRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < n; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

class AdaptiveGauss {
 public:
  AdaptiveGauss(const Integrand& f, int points, Accumulator& acc)
      : f_(f), rule_(gauss_legendre_rule(points)), acc_(acc) {}

  double run(double a, double b, double tol, int depth) { return step(a, b, panel(a, b), tol, depth); }

 private:
  double panel(double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double s = 0.0;
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      s += rule_.weights[i] * f_(mid + half * rule_.nodes[i]);
    }
    return s * half;
  }

  double step(double a, double b, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double left = panel(a, m);
    const double right = panel(m, b);
    const double delta = left + right - whole;
    if (std::abs(delta) <= tol || at_rounding_floor(delta, left + right)) {
      acc_.error += std::abs(delta);
      return left + right;
    }
    if (depth <= 0) {
      acc_.exhausted = true;
      acc_.error += std::abs(delta);
      return left + right;
    }
    return step(a, m, left, 0.5 * tol, depth - 1) + step(m, b, right, 0.5 * tol, depth - 1);
  }

  const Integrand& f_;
  GaussRule rule_;
  Accumulator& acc_;
};

void check_modulus(double k, bool allow_one) {
  if (!(k >= 0.0 && (allow_one ? k <= 1.0 : k < 1.0))) {
    throw DomainError("oracle modulus outside its domain: " + std::to_string(k));
  }
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol >= 1e-15)) throw std::invalid_argument("abs_tol must be >= 1e-15");
  if (max_depth < 1 || max_depth > 60) throw std::invalid_argument("max_depth must be in [1, 60]");
  if (rule == Rule::GaussLegendre && (gauss_points < 2 || gauss_points > 64)) {
    throw std::invalid_argument("gauss_points must be in [2, 64]");
  }
}

QuadratureError::QuadratureError(double estimate, double error_bound)
    : std::runtime_error("quadrature depth exhausted (estimate " + std::to_string(estimate) +
                         ", error bound " + std::to_string(error_bound) + ")"),
      estimate_(estimate),
      error_bound_(error_bound) {}

double quad(const Integrand& f, double lo, double hi, const QuadratureSpec& spec) {
  spec.validate();
  if (lo == hi) return 0.0;
  Accumulator acc;
  const double width = (hi - lo) / kInitialPanels;
  const double panel_tol = spec.abs_tol / kInitialPanels;
  double total = 0.0;
  for (int p = 0; p < kInitialPanels; ++p) {
    const double a = lo + p * width;
    const double b = p + 1 == kInitialPanels ? hi : lo + (p + 1) * width;
    if (spec.rule == Rule::AdaptiveSimpson) {
      total += AdaptiveSimpson(f, acc).run(a, b, panel_tol, spec.max_depth);
    } else {
      total += AdaptiveGauss(f, spec.gauss_points, acc).run(a, b, panel_tol, spec.max_depth);
    }
  }
  if (acc.exhausted) throw QuadratureError(total, acc.error);
  return total;
}

double quad_elliptic(EllipticKind kind, double k, const QuadratureSpec& spec) {
  check_modulus(k, kind == EllipticKind::E);
  const double k2 = k * k;
  const Integrand f = kind == EllipticKind::K
                          ? Integrand([k2](double t) {
                              const double s = std::sin(t);
                              return 1.0 / std::sqrt(1.0 - k2 * s * s);
                            })
                          : Integrand([k2](double t) {
                              const double s = std::sin(t);
                              return std::sqrt(std::max(1.0 - k2 * s * s, 0.0));
                            });
  return quad(f, 0.0, 0.5 * std::numbers::pi, spec);
}

double quad_auxiliary(int index, double k, double lo, double hi, const QuadratureSpec& spec) {
  check_modulus(k, index == 1);
  const double k2 = k * k;
  switch (index) {
    case 1:
      return quad([](double t) { return std::pow(std::sin(t), 2) * std::cos(t); }, lo, hi, spec);
    case 2:
      return quad(
          [k2](double t) {
            const double s2 = std::pow(std::sin(t), 2);
            return s2 * std::sqrt(1.0 - k2 * s2);
          },
          lo, hi, spec);
    case 3:
      return quad(
          [k2](double t) {
            const double s2 = std::pow(std::sin(t), 2);
            const double c2 = std::pow(std::cos(t), 2);
            return s2 * c2 / std::sqrt(1.0 - k2 * s2);
          },
          lo, hi, spec);
    default:
      throw std::invalid_argument("auxiliary integral index must be 1, 2 or 3");
  }
}

double x_prime(const CurveParams& params, double t, Derivative mode) {
  if (mode == Derivative::FiniteDifference) {
    constexpr double h = 1e-6;
    return (point_at(params, t + h).x - point_at(params, t - h).x) / (2.0 * h);
  }
  const auto shape = derive(params);
  const double a = params.a();
  const double q2w = shape.q * shape.q * params.w();
  const double s = std::sin(t);
  const double c = std::cos(t);
  const double root = std::sqrt(std::max((a - q2w * s) * (a + q2w * s), 0.0));
  // d/dt sqrt(R) = -q⁴w² s c / sqrt(R); the product with cos t tends to 0
  // where R vanishes (only at t = π/2 when k = 1)
  const double chain = root > 0.0 ? -q2w * q2w * s * c * c / root : 0.0;
  return -2.0 * q2w * s * c - s * root + chain;
}

AreaQuadrature quad_area(const CurveParams& params, const QuadratureSpec& spec, Derivative mode) {
  const double qb = derive(params).q * params.b();
  const Integrand integrand = [&params, qb, mode](double t) {
    return qb * std::sin(t) * x_prime(params, t, mode);
  };
  constexpr double half_pi = 0.5 * std::numbers::pi;
  AreaQuadrature out{};
  out.part2 = -2.0 * quad(integrand, 0.0, half_pi, spec);
  out.part1 = -2.0 * quad(integrand, half_pi, std::numbers::pi, spec);
  out.total = out.part1 + out.part2;
  return out;
}

}  // namespace egg::oracle
