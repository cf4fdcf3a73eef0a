#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "egg/area.hpp"
#include "egg/error.hpp"
#include "egg/sweep.hpp"

namespace egg {
namespace {

constexpr double kPi = std::numbers::pi;

// tests/oracles/freeze_values.py
constexpr double kI2_05 = 0.707442215252977939231340146472;
constexpr double kI3_05 = 0.210311115333885107988459896189;
constexpr double kI3_01 = 0.196842729183710813548127881632;
constexpr double kArea432 = 36.4809597161495623789658457849;
constexpr double kArea234 = 9.12023992903739059474146144623;

TEST(IntegralI, ClosedForms) {
  EXPECT_EQ(integral_I(1, 0.3), 1.0 / 3.0);
  EXPECT_NEAR(integral_I(2, 0.5), kI2_05, 1e-13);
  EXPECT_NEAR(integral_I(3, 0.5), kI3_05, 1e-13);
  EXPECT_NEAR(integral_I(3, 0.1), kI3_01, 1e-14);
}

TEST(IntegralI, AgainstQuadrature) {
  for (const double k : {0.1, 0.5, 0.9}) {
    const double tol = k == 0.9 ? 1e-8 : 1e-9;
    EXPECT_NEAR(integral_I(2, k), oracle::quad_auxiliary(2, k, 0.0, kPi / 2), tol) << k;
    EXPECT_NEAR(integral_I(3, k), oracle::quad_auxiliary(3, k, 0.0, kPi / 2), tol) << k;
  }
}

TEST(IntegralI, SmallModulusLimit) {
  EXPECT_NEAR(integral_I(3, 1e-4), kPi / 16, 1e-8);
  // both sides of the series cutoff agree with the quadrature
  for (const double k : {0.2, 0.2499, 0.25, 0.3}) {
    EXPECT_NEAR(integral_I(3, k), oracle::quad_auxiliary(3, k, 0.0, kPi / 2), 1e-10) << k;
  }
}

TEST(IntegralI, DomainErrors) {
  EXPECT_THROW((void)integral_I(2, 0.0), DomainError);
  EXPECT_THROW((void)integral_I(3, 1.0), DomainError);
  EXPECT_THROW((void)integral_I(4, 0.5), std::invalid_argument);
}

TEST(JRelations, HoldOnModulusGrid) {
  EXPECT_LE(check_J_relations(0.1).max(), 1e-9);
  EXPECT_LE(check_J_relations(0.5).max(), 1e-9);
  EXPECT_LE(check_J_relations(0.9).max(), 1e-8);
}

TEST(AreaExact, SubareaDifference) {
  const auto r = area_exact(CurveParams(4, 3, 2));
  EXPECT_EQ(r.k, 0.5);
  EXPECT_EQ(r.scale, 12.0);
  EXPECT_NEAR(r.part2 - r.part1, 16.0, 1e-12);
  EXPECT_NEAR(r.total, kArea432, 1e-12);
  EXPECT_NEAR(area_exact(CurveParams(2, 3, 4)).total, kArea234, 1e-12);
}

TEST(AreaExact, MatchesOracle) {
  const CurveParams p(4, 3, 2);
  EXPECT_NEAR(area_exact(p).total, oracle::quad_area(p).total, 1e-8 * kArea432);
}

TEST(AreaExact, DegenerateBranch) {
  const auto r = area_exact(CurveParams(2, 2, 2));
  EXPECT_DOUBLE_EQ(r.total, 32.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.part2 - r.part1, 32.0 / 3.0);
  EXPECT_EQ(r.part1, 0.0);
}

TEST(AreaExact, NearDegenerateUsesSeriesContinuously) {
  // straddle the k = 0.99 switch and approach k = 1
  const double a = 1.0;
  double previous = area_exact(CurveParams(a, 1, 0.985)).total;
  for (const double w : {0.989, 0.99, 0.9901, 0.995, 0.999, 0.99999}) {
    const double current = area_exact(CurveParams(a, 1, w)).total;
    EXPECT_LT(current, previous) << w;
    EXPECT_NEAR(current, oracle::quad_area(CurveParams(a, 1, w)).total, 1e-8) << w;
    previous = current;
  }
  EXPECT_GT(previous, 8.0 / 3.0);
}

TEST(AreaExact, DecompositionOnRandomCurves) {
  for (const auto regime : {Regime::WLessA, Regime::WGreaterA}) {
    for (const auto& p : random_curves(2024, 50, regime)) {
      const auto r = area_exact(p);
      EXPECT_NEAR(r.part1 + r.part2, r.total, 1e-11 * r.total);
      EXPECT_NEAR(r.part2 - r.part1, 8.0 / 3.0 * r.scale * r.k, 1e-11 * r.total);
      const double piecewise = regime == Regime::WLessA
                                   ? 8.0 * p.w() * p.b() / 3.0
                                   : 8.0 * p.b() * std::pow(p.a(), 3) / (3.0 * p.w() * p.w());
      EXPECT_NEAR(r.part2 - r.part1, piecewise, 1e-11 * r.total);
      EXPECT_LE(8.0 / 3.0 * r.scale, r.total);
      EXPECT_LE(r.total, kPi * r.scale);
    }
  }
}

TEST(AreaExact, MonotoneInModulusAtFixedScale) {
  // a = b = 1, w < a keeps q = 1 and abq = 1 while k = w sweeps (0, 1)
  double previous = kPi;
  for (int i = 1; i <= 99; ++i) {
    const double k = i / 100.0;
    const double current = area_exact(CurveParams(1, 1, k)).total;
    EXPECT_LT(current, previous) << k;
    previous = current;
  }
}

TEST(AreaSeries, AgreesWithClosedForm) {
  const CurveParams p(4, 3, 2);
  EXPECT_NEAR(area_series(p, 1e-14), area_exact(p).total, 1e-12 * kArea432);
  for (const double k : uniform_grid(0.05, 19)) {
    const CurveParams q(1, 1, k);
    EXPECT_NEAR(area_series(q, 1e-16), area_exact(q).total, 1e-11 * area_exact(q).total) << k;
  }
}

TEST(AreaSeries, Limits) {
  EXPECT_EQ(area_series_of_modulus(0.0, 1e-12).value, kPi);
  const CurveParams p(2, 2, 2);
  const double series = area_series(p, 1e-30, 1'000'000);
  EXPECT_NEAR(series, 32.0 / 3.0, 1e-9 * 32.0 / 3.0);
}

TEST(AreaTaylor, LowDegreeValues) {
  EXPECT_DOUBLE_EQ(area_taylor(CurveParams(1, 1, 0.5), 0, ApproxKind::First), kPi);
  const CurveParams p(4, 3, 2);
  EXPECT_DOUBLE_EQ(area_taylor(p, 0, ApproxKind::Second, 1.0), 8.0 / 3.0 * 12.0);
  const double k = 0.5;
  const double expected = 12.0 * kPi * (1 - k * k / 8) + 12.0 * (8.0 / 3.0 - 7 * kPi / 8) * k * k * k;
  EXPECT_NEAR(area_taylor(p, 3, ApproxKind::Second, 1.0), expected, 1e-13);
}

TEST(AreaTaylor, Sandwich) {
  for (const double k : uniform_grid(0.1, 9)) {
    const CurveParams p(1.5, 0.8, 1.5 * k);
    const double exact = area_exact(p).total;
    double previous_upper = INFINITY;
    double previous_lower = -INFINITY;
    for (unsigned n = 0; n <= 10; ++n) {
      const double upper = area_taylor(p, n, ApproxKind::First);
      const double lower = area_taylor(p, n, ApproxKind::Second, 1.0);
      EXPECT_GE(upper, exact - 1e-14) << n << " " << k;
      EXPECT_LE(lower, exact + 1e-14) << n << " " << k;
      EXPECT_LE(upper, previous_upper + 1e-14);
      EXPECT_GE(lower, previous_lower - 1e-14);
      previous_upper = upper;
      previous_lower = lower;
    }
  }
}

TEST(Bounds, CoarseAndRefined) {
  const auto c = bounds(CurveParams(4, 3, 2));
  EXPECT_DOUBLE_EQ(c.lower_coarse, 32.0);
  EXPECT_DOUBLE_EQ(c.upper_coarse, 12.0 * kPi);
  EXPECT_TRUE(c.strictly_ordered());
  EXPECT_NEAR(c.nabla, 0.375 * kPi, 1e-15);
  EXPECT_NEAR(c.nabla_piecewise, 0.375 * kPi, 1e-15);
  EXPECT_NEAR(c.lower_refined - c.lower_coarse, c.delta, 1e-12);
  EXPECT_NEAR(c.upper_coarse - c.upper_refined, c.nabla, 1e-12);
  EXPECT_FALSE(c.pi_form_consistent);
}

TEST(Bounds, WGreaterThanA) {
  const auto c = bounds(CurveParams(2, 3, 4));
  EXPECT_NEAR(c.nabla, kPi * 16 * 3 / 512, 1e-12);
  EXPECT_NEAR(c.nabla_piecewise, c.nabla, 1e-12);
  EXPECT_TRUE(c.strictly_ordered());
}

TEST(Bounds, DegenerateCollapse) {
  const auto c = bounds(CurveParams(2, 2, 2));
  EXPECT_EQ(c.delta, 0.0);
  EXPECT_DOUBLE_EQ(c.lower_refined, c.exact);
  EXPECT_DOUBLE_EQ(c.lower_refined, 32.0 / 3.0);
  EXPECT_TRUE(c.ordered());
}

TEST(Bounds, OrderingOnRandomCurves) {
  for (const auto regime : {Regime::WLessA, Regime::WGreaterA}) {
    for (const auto& p : random_curves(77, 40, regime)) {
      const auto c = bounds(p);
      EXPECT_TRUE(c.strictly_ordered());
      EXPECT_NEAR(c.nabla_piecewise, c.nabla, 1e-12 * c.exact);
    }
  }
}

TEST(Bounds, PiFormDeltaInconsistentForSmallModulus) {
  for (const double k : {0.05, 0.1, 0.2, 0.29}) {
    EXPECT_FALSE(bounds(CurveParams(1, 1, k)).pi_form_consistent) << k;
  }
}

TEST(InvPi, FirstPartialSum) {
  EXPECT_EQ(inv_pi_partial(1).value, 21.0 / 64.0);
  EXPECT_EQ(inv_pi_partial(1).last_term, 0.375 / 8.0);
  EXPECT_THROW((void)inv_pi_partial(0), DomainError);
}

TEST(InvPi, TailEstimate) {
  // remainder after N terms ~ (3/8) / (4π N²)
  for (const std::uint64_t n : {100u, 1000u, 10000u}) {
    const double error = inv_pi_partial(n).value - 1.0 / kPi;
    const double predicted = 0.375 / (4.0 * kPi * double(n) * double(n));
    EXPECT_NEAR(error / predicted, 1.0, 2.0 / double(n));
  }
  EXPECT_LE(std::abs(inv_pi_partial(10000).value - 1.0 / kPi), 1e-8);
}

TEST(InvPi, StrictlyDecreasing) {
  double previous = inv_pi_partial(1).value;
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const double current = inv_pi_partial(n).value;
    EXPECT_LT(current, previous);
    EXPECT_GT(current, 1.0 / kPi);
    previous = current;
  }
}

}  // namespace
}  // namespace egg
