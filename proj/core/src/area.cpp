#include "egg/area.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "egg/detail/compensated_sum.hpp"
#include "egg/error.hpp"

namespace egg {
namespace {

constexpr double kPi = std::numbers::pi;

// I_3 as a power series in k² for small k, where the closed form cancels:
// 1/sqrt(1 - k²s²) = Σ g_n k^{2n} s^{2n} with g_n = C(2n, n)/4^n, and
// int_0^{π/2} s^{2n+2} c² dt = W_{2n+2}/(2n+4), W_{2m} = (π/2)(2m-1)!!/(2m)!!.
double integral_I3_series(double k) {
  const double k2 = k * k;
  double g = 1.0;
  double wallis = kPi / 4.0;  // W_2
  double power = 1.0;
  detail::CompensatedSum sum;
  for (int n = 0; n < 200; ++n) {
    const double term = g * wallis / (2.0 * n + 4.0) * power;
    sum.add(term);
    if (term < 1e-18) break;
    g *= (2.0 * n + 1.0) / (2.0 * n + 2.0);
    wallis *= (2.0 * n + 3.0) / (2.0 * n + 4.0);
    power *= k2;
  }
  return sum.value();
}

}  // namespace

double integral_I(int index, double k) {
  if (index == 1) return 1.0 / 3.0;
  if (index != 2 && index != 3) throw std::invalid_argument("integral index must be 1, 2 or 3");
  if (!(k > 0.0 && k < 1.0)) {
    throw DomainError("I_" + std::to_string(index) + " requires 0 < k < 1, got " + std::to_string(k));
  }
  const Modulus m{k};
  const double K = complete_K(m);
  const double E = complete_E(m);
  if (index == 2) {
    // ((1 - k²)K + (2k² - 1)E)/(3k²) regrouped as (D + 2E - K)/3
    return (complete_D(m) + 2.0 * E - K) / 3.0;
  }
  if (k < kDSeriesCutoff) return integral_I3_series(k);
  const double k2 = k * k;
  return ((2.0 * k2 - 2.0) * K + (2.0 - k2) * E) / (3.0 * k2 * k2);
}

double JRelationMargins::max() const { return std::max({j1, j2, j3}); }

JRelationMargins check_J_relations(double k, const oracle::QuadratureSpec& spec) {
  constexpr double lo = 0.5 * kPi;
  constexpr double hi = kPi;
  return {
      std::abs(oracle::quad_auxiliary(1, k, lo, hi, spec) + 1.0 / 3.0),
      std::abs(oracle::quad_auxiliary(2, k, lo, hi, spec) - integral_I(2, k)),
      std::abs(oracle::quad_auxiliary(3, k, lo, hi, spec) - integral_I(3, k)),
  };
}

AreaBreakdown area_exact(const CurveParams& params) {
  const auto shape = derive(params);
  const double scale = params.a() * params.b() * shape.q;
  const double total = shape.regime == Regime::Degenerate ? 8.0 / 3.0 * scale
                                                          : scale * area_function(shape.k);
  const double difference = 8.0 / 3.0 * scale * shape.k;
  return {total, 0.5 * (total - difference), 0.5 * (total + difference), scale, shape.k};
}

SeriesSum area_series_of_modulus(double k, double tol, std::uint64_t max_terms) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("area series requires 0 <= k <= 1, got " + std::to_string(k));
  }
  return series_eval(SeriesTarget{SeriesKind::Area}, k, tol, max_terms);
}

double area_series(const CurveParams& params, double tol, std::uint64_t max_terms) {
  const auto shape = derive(params);
  const double scale = params.a() * params.b() * shape.q;
  return scale * area_series_of_modulus(shape.k, tol, max_terms).value;
}

double area_taylor(const CurveParams& params, unsigned n, ApproxKind kind, double beta) {
  const auto shape = derive(params);
  const double scale = params.a() * params.b() * shape.q;
  const SeriesTarget target{SeriesKind::Area};
  const auto approx = kind == ApproxKind::First ? first_taylor(target, n)
                                                : second_taylor(target, n, beta);
  return scale * approx.eval(shape.k);
}

bool BoundsCertificate::ordered() const {
  return lower_coarse <= lower_refined && lower_refined <= exact && exact <= upper_refined &&
         upper_refined <= upper_coarse;
}

bool BoundsCertificate::strictly_ordered() const {
  return lower_coarse < lower_refined && lower_refined < exact && exact < upper_refined &&
         upper_refined < upper_coarse;
}

BoundsCertificate bounds(const CurveParams& params) {
  const auto shape = derive(params);
  const double a = params.a();
  const double b = params.b();
  const double w = params.w();
  const double k = shape.k;
  const double scale = a * b * shape.q;

  BoundsCertificate c{};
  c.exact = area_exact(params).total;
  c.lower_coarse = 8.0 / 3.0 * scale;
  c.upper_coarse = kPi * scale;
  c.lower_refined = area_taylor(params, 1, ApproxKind::Second, 1.0);
  c.upper_refined = area_taylor(params, 2, ApproxKind::First);
  c.delta = scale * (kPi - 8.0 / 3.0) * (1.0 - k);
  c.nabla = kPi / 8.0 * scale * k * k;
  c.nabla_piecewise = w <= a ? kPi * b * w * w / (8.0 * a) : kPi * std::pow(a, 4) * b / (8.0 * std::pow(w, 3));
  c.delta_pi_form = scale * kPi * (1.0 - k);
  c.lower_pi_form = c.lower_coarse + c.delta_pi_form;
  c.pi_form_consistent = c.lower_pi_form <= c.exact;
  return c;
}

InvPiPartial inv_pi_partial(std::uint64_t terms) {
  if (terms < 1) throw DomainError("the 1/π series needs at least one term");
  detail::CompensatedSum sum;
  double b = 1.0;  // ((2i-1)!!/(2i)!!)²
  double c = 0.0;
  for (std::uint64_t n = 1; n <= terms; ++n) {
    const double i = static_cast<double>(n);
    const double ratio = (2.0 * i - 1.0) / (2.0 * i);
    b *= ratio * ratio;
    c = b / ((2.0 * i - 1.0) * (i + 1.0));
    sum.add(c);
  }
  return {0.375 * (1.0 - sum.value()), 0.375 * c};
}

}  // namespace egg
