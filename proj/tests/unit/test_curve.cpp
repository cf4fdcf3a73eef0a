#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "egg/curve.hpp"
#include "egg/error.hpp"
#include "egg/sweep.hpp"

namespace egg {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(CurveParams, RejectsNonPositive) {
  EXPECT_THROW(CurveParams(0, 1, 1), DomainError);
  EXPECT_THROW(CurveParams(1, -1, 1), DomainError);
  EXPECT_THROW(CurveParams(1, 1, 0), DomainError);
  EXPECT_THROW(CurveParams(1, 1, INFINITY), DomainError);
}

TEST(Derive, WLessThanA) {
  const auto s = derive(CurveParams(3, 2, 2));
  EXPECT_EQ(s.regime, Regime::WLessA);
  EXPECT_EQ(s.q, 1.0);
  EXPECT_DOUBLE_EQ(s.k, 2.0 / 3.0);
  EXPECT_EQ(s.u, -2.0);
  EXPECT_EQ(s.gamma, -13.0 / 4.0);
}

TEST(Derive, WGreaterThanA) {
  const auto s = derive(CurveParams(2, 2, 4));
  EXPECT_EQ(s.regime, Regime::WGreaterA);
  EXPECT_EQ(s.q, 0.5);
  EXPECT_EQ(s.k, 0.5);
  EXPECT_EQ(s.u, -1.0);
  EXPECT_EQ(s.gamma, -2.5);
}

TEST(Derive, Degenerate) {
  const auto s = derive(CurveParams(2, 1, 2));
  EXPECT_EQ(s.regime, Regime::Degenerate);
  EXPECT_EQ(s.q, 1.0);
  EXPECT_EQ(s.k, 1.0);
}

TEST(Derive, InvariantsOnRandomCurves) {
  for (const auto regime : {Regime::WLessA, Regime::WGreaterA}) {
    for (const auto& p : random_curves(11, 200, regime)) {
      const auto s = derive(p);
      EXPECT_GT(s.q, 0.0);
      EXPECT_LE(s.q, 1.0);
      EXPECT_GT(s.k, 0.0);
      EXPECT_LT(s.k, 1.0);
      EXPECT_NEAR(s.k, s.q * s.q * p.w() / p.a(), 1e-15);
      EXPECT_NEAR(s.u, -s.q * s.q * p.w(), 1e-14 * p.a());
      EXPECT_LT(s.gamma, -p.a());
    }
  }
}

TEST(ImplicitF, KnownPoints) {
  const CurveParams p(3, 2, 2);
  EXPECT_EQ(implicit_F(p, {3, 0}), 0.0);
  EXPECT_EQ(implicit_F(p, {-3, 0}), 0.0);
  EXPECT_EQ(implicit_F(p, {0, 0}), -36.0);
  EXPECT_EQ(implicit_Fq(p, {3, 0}), 0.0);
}

// Points on the original cubic found by bisection in y for fixed x; they
// must also zero the unified cubic.
TEST(ImplicitFq, VanishesOnRootsOfF) {
  const CurveParams p(2, 2, 4);
  for (const double x : {-1.5, -0.5, 0.0, 0.7, 1.5}) {
    double lo = 0.0;
    double hi = 2.0;  // F(x, 0) < 0 inside the oval, F(x, 2) > 0 here
    ASSERT_LT(implicit_F(p, {x, lo}), 0.0);
    ASSERT_GT(implicit_F(p, {x, hi}), 0.0);
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (implicit_F(p, {x, mid}) < 0.0 ? lo : hi) = mid;
    }
    EXPECT_NEAR(implicit_Fq(p, {x, lo}), 0.0, 1e-10);
  }
}

TEST(Unification, ProportionalityIsExact) {
  const auto c = unification_check(Rational(2), Rational(2), Rational(4));
  EXPECT_EQ(c.q, Rational(1, 2));
  EXPECT_TRUE(c.holds());
  EXPECT_EQ(c.product, 0);
  // a q that is not the regime's choice breaks the proportionality
  const auto other = unification_check(Rational(7, 3), Rational(5, 11), Rational(13, 17));
  EXPECT_EQ(other.q, Rational(1));
  EXPECT_TRUE(other.holds());
}

TEST(PointAt, SpecialParameters) {
  const CurveParams p(2, 2, 4);
  const auto s = derive(p);
  const auto p0 = point_at(p, 0.0);
  EXPECT_EQ(p0.x, 2.0);
  EXPECT_EQ(p0.y, 0.0);
  const auto top = point_at(p, kPi / 2);
  EXPECT_NEAR(top.x, -s.q * s.q * p.w(), 1e-15);
  EXPECT_DOUBLE_EQ(top.y, s.q * p.b());
  const auto back = point_at(p, kPi);
  EXPECT_DOUBLE_EQ(back.x, -2.0);
  EXPECT_NEAR(back.y, 0.0, 1e-15);
}

TEST(PointAt, SymmetryRangeAndExtremum) {
  SplitMix64 rng(5);
  for (const auto regime : {Regime::WLessA, Regime::WGreaterA, Regime::Degenerate}) {
    for (const auto& p : random_curves(17, 50, regime)) {
      const auto s = derive(p);
      const double ymax = s.q * p.b();
      for (int i = 0; i < 20; ++i) {
        const double t = rng.uniform(0.0, 2 * kPi);
        const auto pt = point_at(p, t);
        const auto mirror = point_at(p, 2 * kPi - t);
        EXPECT_NEAR(mirror.x, pt.x, 1e-12 * p.a());
        EXPECT_NEAR(mirror.y, -pt.y, 1e-12 * p.b());
        EXPECT_LE(std::abs(pt.x), p.a() * (1 + 1e-15));
        EXPECT_LE(std::abs(pt.y), ymax * (1 + 1e-15));
      }
      EXPECT_NEAR(point_at(p, kPi / 2).x, s.u, 1e-13 * p.a());
    }
  }
}

TEST(PointAt, OnUnifiedCurve) {
  SplitMix64 rng(99);
  for (const auto regime : {Regime::WLessA, Regime::WGreaterA, Regime::Degenerate}) {
    for (const auto& p : random_curves(3, 100, regime)) {
      const double q = derive(p).q;
      const double scale = p.a() * p.a() * p.b() * p.b() * q * q;
      for (int i = 0; i < 10; ++i) {
        const auto pt = point_at(p, rng.uniform(0.0, 2 * kPi));
        EXPECT_LE(std::abs(implicit_Fq(p, pt)), 1e-9 * scale);
        // the original cubic vanishes too, up to the factor q²
        EXPECT_LE(std::abs(implicit_F(p, pt)), 1e-9 * scale / (q * q));
      }
    }
  }
}

TEST(SampleEgg, Endpoints) {
  const CurveParams p(3, 2, 2);
  const auto two = sample_egg(p, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].x, 3.0);
  EXPECT_EQ(two[1].x, 3.0);
  EXPECT_EQ(two[1].y, 0.0);
  EXPECT_THROW((void)sample_egg(p, 1), DomainError);
}

TEST(SampleEgg, QuarterPoints) {
  const CurveParams p(2, 2, 4);
  const auto s = derive(p);
  const auto pts = sample_egg(p, 5);
  ASSERT_EQ(pts.size(), 5u);
  EXPECT_NEAR(pts[1].x, -s.q * s.q * p.w(), 1e-15);
  EXPECT_DOUBLE_EQ(pts[1].y, s.q * p.b());
  EXPECT_NEAR(pts[3].x, -s.q * s.q * p.w(), 1e-15);
  EXPECT_DOUBLE_EQ(pts[3].y, -s.q * p.b());
  for (const auto& pt : sample_egg(p, 257)) {
    EXPECT_LE(std::abs(implicit_Fq(p, pt)), 1e-9 * p.a() * p.a() * p.b() * p.b() * s.q * s.q);
  }
}

TEST(ConstructionCircles, KnownPoints) {
  const CurveParams p(3, 2, 2);
  const auto c = construction_circles(p, 5);
  EXPECT_EQ(c.outer.front().x, 3.0);
  EXPECT_EQ(c.outer.front().y, 0.0);
  EXPECT_EQ(c.inner.front().x, 0.0);  // -q²w + qb = -2 + 2
  EXPECT_NEAR(c.inner[1].x, -2.0, 1e-15);
  EXPECT_DOUBLE_EQ(c.inner[1].y, 2.0);
}

TEST(ConstructionCircles, EggPointUsesBothCircles) {
  // P_t takes its ordinate from the inner circle
  const CurveParams p(4, 1.5, 1);
  const auto c = construction_circles(p, 33);
  const auto egg = sample_egg(p, 33);
  for (std::size_t i = 0; i + 1 < egg.size(); ++i) EXPECT_NEAR(egg[i].y, c.inner[i].y, 1e-15);
}

}  // namespace
}  // namespace egg
