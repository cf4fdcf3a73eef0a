#include "egg/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "egg/error.hpp"

namespace egg {

CurveParams::CurveParams(double a, double b, double w) : a_(a), b_(b), w_(w) {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(a) || !positive(b) || !positive(w)) {
    throw DomainError("curve parameters must be finite and positive (a=" + std::to_string(a) +
                      ", b=" + std::to_string(b) + ", w=" + std::to_string(w) + ")");
  }
}

DerivedShape derive(const CurveParams& params) {
  const double a = params.a();
  const double w = params.w();
  DerivedShape s{};
  if (w < a) {
    s.regime = Regime::WLessA;
    s.q = 1.0;
    s.k = w / a;
    s.u = -w;
  } else if (w > a) {
    s.regime = Regime::WGreaterA;
    s.q = a / w;
    s.k = a / w;
    s.u = -a * a / w;
  } else {
    s.regime = Regime::Degenerate;
    s.q = 1.0;
    s.k = 1.0;
    s.u = -w;
  }
  s.gamma = -(a * a + w * w) / (2.0 * w);
  return s;
}

double implicit_F(const CurveParams& params, PlanePoint p) {
  const double a = params.a();
  const double b = params.b();
  const double w = params.w();
  const double y2 = p.y * p.y;
  return 2.0 * w * p.x * y2 + b * b * p.x * p.x + (a * a + w * w) * y2 - a * a * b * b;
}

double implicit_Fq(const CurveParams& params, PlanePoint p) {
  const double a = params.a();
  const double b = params.b();
  const double w = params.w();
  const double q = derive(params).q;
  const double q2 = q * q;
  const double y2 = p.y * p.y;
  return 2.0 * q2 * w * p.x * y2 + q2 * b * b * p.x * p.x + (a * a + q2 * q2 * w * w) * y2 -
         a * a * b * b * q2;
}

PlanePoint point_at(const CurveParams& params, double t) {
  const auto s = derive(params);
  const double a = params.a();
  const double q2w = s.q * s.q * params.w();
  const double sn = std::sin(t);
  const double cs = std::cos(t);
  // a² - q⁴w² sin²t, written as a product to keep it >= 0 when k = 1
  const double radicand = (a - q2w * sn) * (a + q2w * sn);
  return {-q2w * sn * sn + cs * std::sqrt(std::max(radicand, 0.0)), s.q * params.b() * sn};
}

std::vector<double> uniform_angles(int n) {
  if (n < 2) throw DomainError("need at least 2 samples, got " + std::to_string(n));
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) t[j] = 2.0 * std::numbers::pi * j / (n - 1);
  t.back() = 2.0 * std::numbers::pi;
  return t;
}

std::vector<PlanePoint> sample_egg(const CurveParams& params, int n) {
  std::vector<PlanePoint> pts;
  for (const double t : uniform_angles(n)) pts.push_back(point_at(params, t));
  // close the curve exactly: sin(2π) is not exactly 0 in floating point
  pts.back() = pts.front();
  return pts;
}

ConstructionCircles construction_circles(const CurveParams& params, int n) {
  const auto s = derive(params);
  const double a = params.a();
  const double r = s.q * params.b();
  const double cx = -s.q * s.q * params.w();
  ConstructionCircles out;
  for (const double t : uniform_angles(n)) {
    out.outer.push_back({a * std::cos(t), a * std::sin(t)});
    out.inner.push_back({cx + r * std::cos(t), r * std::sin(t)});
  }
  return out;
}

UnificationCheck unification_check(const Rational& a, const Rational& b, const Rational& w) {
  if (a <= 0 || b <= 0 || w <= 0) throw DomainError("curve parameters must be positive");
  UnificationCheck c;
  c.q = w <= a ? Rational{1} : a / w;
  const Rational q2 = c.q * c.q;
  c.ratios[0] = (2 * q2 * w) / (2 * w);
  c.ratios[1] = (q2 * b * b) / (b * b);
  c.ratios[2] = (a * a + q2 * q2 * w * w) / (a * a + w * w);
  c.ratios[3] = (a * a * b * b * q2) / (a * a * b * b);
  c.product = (q2 - 1) * (q2 * w * w - a * a);
  return c;
}

}  // namespace egg
