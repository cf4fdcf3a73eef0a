#include "eggcli/battery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <fmt/format.h>

#include "egg/area.hpp"
#include "egg/elliptic.hpp"
#include "egg/oracle.hpp"
#include "egg/sweep.hpp"
#include "eggcli/emit.hpp"
#include "eggcli/tables.hpp"

namespace egg::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kTripleSeedLess = 20241;
constexpr std::uint64_t kTripleSeedGreater = 20242;

class Battery {
 public:
  explicit Battery(const BatteryOptions& options) : options_(options) {}

  double limit(double built_in) const { return options_.tol.value_or(built_in); }

  void add_tolerance(std::string name, int criterion, double worst, double built_in,
                     std::string detail = {}) {
    const double lim = limit(built_in);
    results_.push_back({std::move(name), criterion, worst <= lim, worst, lim, std::move(detail)});
  }

  // Thresholds on ratios and other shape checks, which --tol does not touch.
  void add_fixed(std::string name, int criterion, double worst, double fixed_limit,
                 std::string detail = {}) {
    results_.push_back({std::move(name), criterion, worst <= fixed_limit, worst, fixed_limit,
                        std::move(detail)});
  }

  // Exact checks: `failures` must be zero.
  void add_exact(std::string name, int criterion, std::size_t failures, std::string detail = {}) {
    results_.push_back({std::move(name), criterion, failures == 0, static_cast<double>(failures),
                        0.0, std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  BatteryOptions options_;
  std::vector<CheckResult> results_;
};

std::vector<CurveParams> twenty_triples() {
  auto triples = random_curves(kTripleSeedLess, 10, Regime::WLessA);
  for (const auto& p : random_curves(kTripleSeedGreater, 10, Regime::WGreaterA)) triples.push_back(p);
  return triples;
}

double relative(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

void table_fixtures(Battery& battery) {
  std::size_t failures = 0;
  std::string detail;
  for (const auto& table : fixtures::tables()) {
    for (const auto& m : fixtures::compare_with_table(table)) {
      if (failures++ == 0) detail = m.where + ": expected " + m.expected + ", got " + m.actual;
    }
  }
  battery.add_exact("table fixtures j=0..10", 1, failures, detail);
}

void elliptic_identity(Battery& battery) {
  double worst = 0.0;
  for (const double k : uniform_grid(0.05, 19)) {
    const Modulus m{k};
    worst = std::max(worst, std::abs(complete_K(m) - complete_E(m) - k * k * complete_D(m)));
  }
  battery.add_tolerance("identity K-E-k^2 D", 2, worst, 1e-12);
}

void oracle_equivalence(Battery& battery, const std::vector<CurveParams>& triples) {
  double worst = 0.0;
  for (const auto& p : triples) {
    worst = std::max(worst, relative(oracle::quad_area(p).total, area_exact(p).total));
  }
  battery.add_tolerance("area vs quadrature, 20 triples", 3, worst, 1e-8);

  for (const auto& [ks, built_in] :
       {std::pair{std::vector<double>{0.1, 0.5}, 1e-9}, std::pair{std::vector<double>{0.9}, 1e-8}}) {
    double worst_i = 0.0;
    double worst_j = 0.0;
    std::string where;
    for (const double k : ks) {
      for (const int index : {2, 3}) {
        worst_i = std::max(
            worst_i, std::abs(integral_I(index, k) - oracle::quad_auxiliary(index, k, 0.0, kPi / 2)));
      }
      worst_j = std::max(worst_j, check_J_relations(k).max());
      where += (where.empty() ? "k=" : ",") + fmt::format("{}", k);
    }
    battery.add_tolerance("I2, I3 closed forms vs quadrature " + where, 3, worst_i, built_in);
    battery.add_tolerance("J relations " + where, 3, worst_j, built_in);
  }
}

void decomposition(Battery& battery, const std::vector<CurveParams>& triples) {
  double worst_sum = 0.0;
  double worst_difference = 0.0;
  for (const auto& p : triples) {
    const auto r = area_exact(p);
    worst_sum = std::max(worst_sum, std::abs(r.part1 + r.part2 - r.total) / r.total);
    const double piecewise = derive(p).regime == Regime::WGreaterA
                                 ? 8.0 * std::pow(p.a(), 3) * p.b() / (3.0 * p.w() * p.w())
                                 : 8.0 * p.w() * p.b() / 3.0;
    const double difference = r.part2 - r.part1;
    worst_difference = std::max({worst_difference,
                                 std::abs(difference - 8.0 / 3.0 * r.scale * r.k) / r.total,
                                 std::abs(difference - piecewise) / r.total});
  }
  battery.add_tolerance("part1 + part2 = total", 4, worst_sum, 1e-11);
  battery.add_tolerance("part2 - part1 = 8abqk/3 = 8wb/3 | 8a^3b/(3w^2)", 4, worst_difference, 1e-11);
}

void sandwich_chains(Battery& battery) {
  const auto grid = uniform_grid(0.1, 9);
  for (const auto& [kind, beta] : {std::pair{SeriesKind::K, 0.95}, std::pair{SeriesKind::E, 1.0},
                                   std::pair{SeriesKind::D, 0.95}, std::pair{SeriesKind::Area, 1.0}}) {
    const double slack = battery.limit(kChainSlack);
    const auto report = verify_chain(SeriesTarget{kind}, 10, beta, grid, slack);
    double worst = 0.0;
    std::size_t failures = report.violations.size();
    std::string detail;
    for (const auto& v : report.violations) worst = std::max(worst, v.excess);
    if (!report.violations.empty()) {
      const auto& v = report.violations.front();
      detail = fmt::format("{} fails at x={}", v.relation, format_double(v.x));
    }
    for (const auto& point : report.points) {
      for (unsigned j = 1; j <= 10; ++j) {
        const double first_growth =
            std::abs(point.f - point.first[j]) - std::abs(point.f - point.first[j - 1]);
        const double second_growth =
            std::abs(point.second[j] - point.f) - std::abs(point.second[j - 1] - point.f);
        for (const double growth : {first_growth, second_growth}) {
          if (growth > slack) {
            ++failures;
            worst = std::max(worst, growth);
            if (detail.empty()) detail = fmt::format("margin grows at degree {}", j);
          }
        }
      }
    }
    const auto name = fmt::format("sandwich chain {} beta={} j<=10", to_string(kind), beta);
    battery.add_tolerance(name, 5, failures == 0 ? 0.0 : std::max(worst, 2 * slack), kChainSlack,
                          detail);
  }
}

void degenerate_limits(Battery& battery) {
  double worst = 0.0;
  for (const auto& p : random_curves(606, 10, Regime::Degenerate)) {
    worst = std::max(worst, relative(area_exact(p).total, 8.0 * p.a() * p.b() / 3.0));
  }
  battery.add_tolerance("area at k=1 equals 8abq/3", 6, worst, 1e-15);

  const auto at_one = area_series_of_modulus(1.0, 1e-300, 1'000'000);
  battery.add_tolerance("area series at k=1, 1e6 terms", 6, relative(at_one.value, 8.0 / 3.0), 1e-8,
                        fmt::format("partial sum {}, tail estimate {}", format_double(at_one.partial_sum),
                                    format_double(at_one.tail_estimate)));

  const double at_zero = area_series_of_modulus(0.0, 1e-17).value;
  const double near_zero = area_exact(CurveParams(1, 1, 1e-4)).total;
  battery.add_tolerance("A(k) -> abq pi: series at k=0, closed form at k=1e-4", 6,
                        std::max(relative(at_zero, kPi), relative(near_zero, kPi)), 1e-8);
}

double inv_pi_error(double partial) {
  using Decimal = boost::multiprecision::cpp_dec_float_50;
  const Decimal error = Decimal(partial) - Decimal(kInvPiReference);
  return static_cast<double>(boost::multiprecision::abs(error));
}

void inv_pi(Battery& battery) {
  battery.add_exact("1/pi partial sum N=1 equals 21/64", 7,
                    inv_pi_partial(1).value == 21.0 / 64.0 ? 0 : 1);
  // remainder after N terms is about 3/(32 π N²)
  double worst_ratio = 0.0;
  for (const std::uint64_t n : {1000u, 10000u}) {
    const double predicted = 3.0 / (32.0 * kPi * double(n) * double(n));
    worst_ratio = std::max(worst_ratio, std::abs(inv_pi_error(inv_pi_partial(n).value) / predicted - 1));
  }
  battery.add_fixed("1/pi tail matches 3/(32 pi N^2)", 7, worst_ratio, 1e-2);
  battery.add_tolerance("1/pi partial sum N=1e4", 7, inv_pi_error(inv_pi_partial(10000).value), 1e-8);
}

void bounds_certificate(Battery& battery, const std::vector<CurveParams>& triples) {
  std::size_t failures = 0;
  double nabla_worst = 0.0;
  for (const auto& p : triples) {
    const auto c = bounds(p);
    if (!c.strictly_ordered()) ++failures;
    nabla_worst = std::max(nabla_worst, relative(c.nabla_piecewise, c.nabla));
  }
  battery.add_exact("bounds strictly ordered, 20 triples", 8, failures);
  battery.add_tolerance("nabla piecewise vs master form", 8, nabla_worst, 1e-12);

  std::size_t unflagged = 0;
  for (const double k : uniform_grid(0.05, 5)) {
    if (bounds(CurveParams(1, 1, k)).pi_form_consistent) ++unflagged;
  }
  battery.add_exact("pi-form delta flagged inconsistent for k<0.3", 8, unflagged);
}

void geometry(Battery& battery) {
  SplitMix64 rng(909);
  double worst = 0.0;
  std::size_t pairs = 0;
  for (const auto& [regime, count] : {std::pair{Regime::WLessA, 4000}, std::pair{Regime::WGreaterA, 4000},
                                      std::pair{Regime::Degenerate, 2000}}) {
    for (const auto& p : random_curves(910 + static_cast<int>(regime), count, regime)) {
      const double q = derive(p).q;
      const double scale = p.a() * p.a() * p.b() * p.b() * q * q;
      const auto pt = point_at(p, rng.uniform(0.0, 2 * kPi));
      worst = std::max(worst, std::abs(implicit_Fq(p, pt)) / scale);
      ++pairs;
    }
  }
  battery.add_tolerance(fmt::format("implicit_Fq on {} random points", pairs), 9, worst, 1e-9);

  std::size_t failures = 0;
  for (int i = 0; i < 200; ++i) {
    const auto draw = [&rng] {
      return Rational(static_cast<long>(1 + rng.next() % 97), static_cast<long>(1 + rng.next() % 13));
    };
    const Rational a = draw();
    const Rational b = draw();
    const Rational w = draw();
    if (!unification_check(a, b, w).holds()) ++failures;
  }
  battery.add_exact("q-unification exact on 200 rational triples", 9, failures);
}

void supporting(Battery& battery) {
  const double below = complete_D(Modulus{std::nextafter(kDSeriesCutoff, 0.0)});
  const double above = complete_D(Modulus{kDSeriesCutoff});
  battery.add_tolerance("D continuous across series cutoff", 0, std::abs(below - above), 1e-13);

  std::size_t monotone_failures = 0;
  const auto grid = uniform_grid(0.05, 19);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(complete_K(Modulus{grid[i]}) > complete_K(Modulus{grid[i - 1]}))) ++monotone_failures;
    if (!(complete_E(Modulus{grid[i]}) < complete_E(Modulus{grid[i - 1]}))) ++monotone_failures;
    if (!(area_function(grid[i]) < area_function(grid[i - 1]))) ++monotone_failures;
  }
  battery.add_exact("K increasing, E and A(k) decreasing", 0, monotone_failures);

  double series_worst = 0.0;
  for (const double k : uniform_grid(0.05, 18)) {
    for (const auto kind : {SeriesKind::K, SeriesKind::E, SeriesKind::D}) {
      const SeriesTarget target{kind};
      series_worst = std::max(series_worst, std::abs(target.value(k) - series_eval(target, k, 1e-17).value));
    }
  }
  battery.add_tolerance("AGM vs power series for K, E, D", 0, series_worst, 1e-11);

  double richardson_excess = 0.0;
  for (double tol = 1e-6; tol >= 1e-12; tol /= 10) {
    oracle::QuadratureSpec loose;
    loose.abs_tol = tol;
    oracle::QuadratureSpec tight;
    tight.abs_tol = tol / 2;
    for (const int index : {2, 3}) {
      for (const double k : {0.1, 0.5, 0.9}) {
        const double moved = std::abs(oracle::quad_auxiliary(index, k, 0.0, kPi / 2, loose) -
                                      oracle::quad_auxiliary(index, k, 0.0, kPi / 2, tight));
        richardson_excess = std::max(richardson_excess, moved / tol);
      }
    }
  }
  battery.add_exact("halving abs_tol moves less than abs_tol", 0, richardson_excess <= 1.0 ? 0 : 1,
                    fmt::format("largest move / abs_tol = {}", format_double(richardson_excess)));

  double derivative_worst = 0.0;
  for (const auto& p : {CurveParams(4, 3, 2), CurveParams(2, 3, 4), CurveParams(1.5, 1, 1.4)}) {
    for (int i = 0; i < 17; ++i) {
      const double t = 0.05 + 0.37 * i;
      derivative_worst = std::max(derivative_worst,
                                  std::abs(oracle::x_prime(p, t) -
                                           oracle::x_prime(p, t, oracle::Derivative::FiniteDifference)));
    }
  }
  battery.add_tolerance("analytic x' vs finite differences", 0, derivative_worst, 1e-7);

  const CurveParams p(3.3, 1.7, 4.1);
  const bool repeatable = area_exact(p).total == area_exact(p).total &&
                          oracle::quad_area(p).total == oracle::quad_area(p).total;
  battery.add_exact("repeated evaluation is bit-identical", 0, repeatable ? 0 : 1);
}

}  // namespace

std::vector<CheckResult> run_battery(const BatteryOptions& options) {
  Battery battery(options);
  const auto triples = twenty_triples();
  table_fixtures(battery);
  elliptic_identity(battery);
  oracle_equivalence(battery, triples);
  decomposition(battery, triples);
  sandwich_chains(battery);
  degenerate_limits(battery);
  inv_pi(battery);
  bounds_certificate(battery, triples);
  geometry(battery);
  supporting(battery);
  return battery.take();
}

}  // namespace egg::cli
