#pragma once

// Reference coefficient tables of the four approximants for j = 0..10.
// Coefficients are multiples of π; correction constants are "r + s·π".

#include <array>
#include <string>
#include <vector>

#include "egg/rational.hpp"
#include "egg/series.hpp"
#include "egg/taylor.hpp"

namespace egg::fixtures {

struct PiConst {
  const char* rational;
  const char* pi_multiple;

  [[nodiscard]] PiLinear value() const { return {parse_rational(rational), parse_rational(pi_multiple)}; }
};

struct Table {
  SeriesKind kind;
  // π-multiples of x^0, x^2, ..., x^10 in the first-kind polynomials
  std::array<const char*, 6> even_coefficients;
  // top coefficient of the second-kind polynomial at β = 1, j = 0..10
  // (only for the series that converge at 1)
  std::vector<PiConst> endpoint_corrections;
};

inline const std::array<Table, 4>& tables() {
  static const std::array<Table, 4> t{{
      {SeriesKind::K, {"1/2", "1/8", "9/128", "25/512", "1225/32768", "3969/131072"}, {}},
      {SeriesKind::E,
       {"1/2", "-1/8", "-3/128", "-5/512", "-175/32768", "-441/131072"},
       {{"1", "0"},
        {"1", "-1/2"},
        {"1", "-1/2"},
        {"1", "-3/8"},
        {"1", "-3/8"},
        {"1", "-45/128"},
        {"1", "-45/128"},
        {"1", "-175/512"},
        {"1", "-175/512"},
        {"1", "-11025/32768"},
        {"1", "-11025/32768"}}},
      {SeriesKind::D, {"1/4", "3/32", "15/256", "175/4096", "2205/65536", "14553/524288"}, {}},
      {SeriesKind::Area,
       {"1", "-1/8", "-1/64", "-5/1024", "-35/16384", "-147/131072"},
       {{"8/3", "0"},
        {"8/3", "-1"},
        {"8/3", "-1"},
        {"8/3", "-7/8"},
        {"8/3", "-7/8"},
        {"8/3", "-55/64"},
        {"8/3", "-55/64"},
        {"8/3", "-875/1024"},
        {"8/3", "-875/1024"},
        {"8/3", "-13965/16384"},
        {"8/3", "-13965/16384"}}},
  }};
  return t;
}

struct Mismatch {
  std::string where;
  std::string expected;
  std::string actual;
};

/// Compares generated first/second approximants for j = 0..10 against a table.
inline std::vector<Mismatch> compare_with_table(const Table& table) {
  std::vector<Mismatch> out;
  const SeriesTarget target{table.kind};
  const std::string name{to_string(table.kind)};
  for (unsigned j = 0; j <= 10; ++j) {
    const auto first = first_taylor(target, j);
    for (unsigned p = 0; p <= j; ++p) {
      const PiLinear expected =
          p % 2 == 0 ? PiLinear::pi(parse_rational(table.even_coefficients[p / 2])) : PiLinear{};
      const auto& c = first.coefficients()[p];
      if (!c.is_exact() || !(*c.exact == expected)) {
        out.push_back({name + " T_" + std::to_string(j) + " x^" + std::to_string(p),
                       expected.to_string(), c.to_string()});
      }
    }
    if (table.endpoint_corrections.empty()) continue;
    const auto second = second_taylor(target, j, 1.0);
    const PiLinear expected = table.endpoint_corrections[j].value();
    const auto& top = second.coefficients().back();
    if (!top.is_exact() || !(*top.exact == expected)) {
      out.push_back({name + " S_" + std::to_string(j) + " top", expected.to_string(), top.to_string()});
    }
    if (j == 0) continue;
    const auto previous = first_taylor(target, j - 1);
    for (unsigned p = 0; p < j; ++p) {
      const auto& lower = second.coefficients()[p];
      const auto& ref = previous.coefficients()[p];
      if (!lower.is_exact() || !(*lower.exact == *ref.exact)) {
        out.push_back({name + " S_" + std::to_string(j) + " x^" + std::to_string(p),
                       ref.to_string(), lower.to_string()});
      }
    }
  }
  return out;
}

}  // namespace egg::fixtures
