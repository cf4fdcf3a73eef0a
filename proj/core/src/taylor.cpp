#include "egg/taylor.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "egg/error.hpp"

namespace egg {

std::string Coefficient::to_string() const {
  if (exact) return exact->to_string();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", numeric);
  return buf;
}

bool first_kind_is_lower(SeriesKind kind) {
  return kind == SeriesKind::K || kind == SeriesKind::D;
}

TaylorApprox first_taylor(const SeriesTarget& target, unsigned n) {
  std::vector<Coefficient> coeffs;
  coeffs.reserve(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    coeffs.push_back(j % 2 == 0 ? Coefficient::from_exact(PiLinear::pi(target.coeff(j / 2)))
                                : Coefficient::from_exact(PiLinear{}));
  }
  return TaylorApprox(target, ApproxKind::First, n, target.radius(), std::move(coeffs));
}

TaylorApprox second_taylor(const SeriesTarget& target, unsigned n, double beta) {
  if (!(beta > 0.0 && beta <= target.radius())) {
    throw DomainError("second Taylor endpoint must lie in (0, 1], got " + std::to_string(beta));
  }
  const auto endpoint = beta == 1.0 ? target.value_at_one() : std::nullopt;
  if (beta == 1.0 && !endpoint) beta = kDivergentEndpointBeta;

  if (n == 0) {
    auto c = endpoint ? Coefficient::from_exact(PiLinear::plain(*endpoint))
                      : Coefficient::from_double(target.value(beta));
    return TaylorApprox(target, ApproxKind::Second, 0, beta, {std::move(c)});
  }

  auto coeffs = first_taylor(target, n - 1).coefficients();
  if (endpoint) {
    // β = 1: the correction is f(1) - T_{n-1}(1), exact
    PiLinear correction = PiLinear::plain(*endpoint);
    for (const auto& c : coeffs) correction = correction - *c.exact;
    coeffs.push_back(Coefficient::from_exact(std::move(correction)));
  } else {
    double at_beta = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) at_beta = at_beta * beta + it->numeric;
    const double correction = (target.value(beta) - at_beta) / std::pow(beta, n);
    coeffs.push_back(Coefficient::from_double(correction));
  }
  return TaylorApprox(target, ApproxKind::Second, n, beta, std::move(coeffs));
}

double TaylorApprox::eval(double x) const {
  const double ax = std::abs(x);
  const bool ok = kind_ == ApproxKind::Second
                      ? ax <= beta_
                      : (ax < beta_ || (ax == beta_ && target_.value_at_one().has_value()));
  if (!ok) {
    throw DomainError("Taylor approximant evaluated outside its interval at x = " +
                      std::to_string(x));
  }
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->numeric;
  return acc;
}

ChainReport verify_chain(const SeriesTarget& target, unsigned max_degree, double beta,
                         const std::vector<double>& grid, double slack) {
  std::vector<TaylorApprox> first;
  std::vector<TaylorApprox> second;
  for (unsigned j = 0; j <= max_degree; ++j) {
    first.push_back(first_taylor(target, j));
    second.push_back(second_taylor(target, j, beta));
  }
  const double used_beta = second.front().beta();

  ChainReport report{target.kind(), max_degree, used_beta, {}, {}, slack};
  const bool lower = first_kind_is_lower(target.kind());

  for (const double x : grid) {
    if (!(x > 0.0 && x <= used_beta)) {
      throw DomainError("chain grid point outside (0, beta]: " + std::to_string(x));
    }
    ChainPoint pt{x, target.value(x), {}, {}, 0.0, 0.0};
    for (unsigned j = 0; j <= max_degree; ++j) {
      pt.first.push_back(first[j].eval(x));
      pt.second.push_back(second[j].eval(x));
    }
    pt.first_margin = std::abs(pt.f - pt.first.back());
    pt.second_margin = std::abs(pt.second.back() - pt.f);

    // "small <= big" in the increasing direction of the chain
    auto check = [&](double small, double big, std::string small_name, std::string big_name) {
      if (!lower) {
        std::swap(small, big);
        std::swap(small_name, big_name);
      }
      const double excess = small - big;
      if (excess > slack) {
        report.violations.push_back({x, small_name + " <= " + big_name, excess});
      }
    };
    const auto T = [](unsigned j) { return "T_" + std::to_string(j); };
    const auto S = [](unsigned j) { return "S_" + std::to_string(j); };
    for (unsigned j = 0; j < max_degree; ++j) check(pt.first[j], pt.first[j + 1], T(j), T(j + 1));
    check(pt.first[max_degree], pt.f, T(max_degree), "f");
    check(pt.f, pt.second[max_degree], "f", S(max_degree));
    for (unsigned j = max_degree; j > 0; --j) check(pt.second[j], pt.second[j - 1], S(j), S(j - 1));

    report.points.push_back(std::move(pt));
  }
  return report;
}

}  // namespace egg
