#include "egg/series.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "egg/detail/compensated_sum.hpp"
#include "egg/elliptic.hpp"
#include "egg/error.hpp"

namespace egg {
namespace {

constexpr double kPi = std::numbers::pi;

using detail::CompensatedSum;

// Generates the terms c_i x^{2i} in double precision by ratio recurrence.
class TermGenerator {
 public:
  TermGenerator(SeriesKind kind, double x) : kind_(kind), x2_(x * x) {}

  // Term of index i_, then advances.
  double next() {
    const double i = static_cast<double>(i_);
    double term = 0.0;
    switch (kind_) {
      case SeriesKind::K:
        term = 0.5 * kPi * b_ * power_;
        break;
      case SeriesKind::E:
        term = i_ == 0 ? 0.5 * kPi : -0.5 * kPi * b_ / (2.0 * i - 1.0) * power_;
        break;
      case SeriesKind::D:
        // ((2i+1)!!/(2i+2)!!)² equals b_{i+1}
        term = kPi * (i + 1.0) / (2.0 * i + 1.0) * b_ * square((2.0 * i + 1.0) / (2.0 * i + 2.0)) *
               power_;
        break;
      case SeriesKind::Area:
        term = i_ == 0 ? kPi : -kPi * b_ / ((2.0 * i - 1.0) * (i + 1.0)) * power_;
        break;
    }
    b_ *= square((2.0 * i + 1.0) / (2.0 * i + 2.0));
    power_ *= x2_;
    ++i_;
    return term;
  }

  [[nodiscard]] std::uint64_t index() const { return i_; }

 private:
  static double square(double v) { return v * v; }

  SeriesKind kind_;
  double x2_;
  double b_ = 1.0;      // ((2i-1)!!/(2i)!!)²
  double power_ = 1.0;  // x^{2i}
  std::uint64_t i_ = 0;
};

// Exponent p of the algebraic decay |c_i| ~ C i^-p of the terms at x = 1.
double endpoint_decay(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::E: return 2.0;
    case SeriesKind::Area: return 3.0;
    default: return 1.0;  // K and D diverge at 1 and never get here
  }
}

}  // namespace

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::K: return "K";
    case SeriesKind::E: return "E";
    case SeriesKind::D: return "D";
    case SeriesKind::Area: return "A";
  }
  return "?";
}

std::optional<SeriesKind> parse_series_kind(std::string_view name) {
  if (name == "K") return SeriesKind::K;
  if (name == "E") return SeriesKind::E;
  if (name == "D") return SeriesKind::D;
  if (name == "A" || name == "Area") return SeriesKind::Area;
  return std::nullopt;
}

Rational SeriesTarget::coeff(unsigned i) const {
  // b_j = ((2j-1)!!/(2j)!!)² via b_{j+1} = b_j ((2j+1)/(2j+2))²
  Rational b{1};
  for (unsigned j = 0; j < i; ++j) {
    const Rational ratio{2 * j + 1, 2 * j + 2};
    b *= ratio * ratio;
  }
  switch (kind_) {
    case SeriesKind::K:
      return b / 2;
    case SeriesKind::E:
      if (i == 0) return Rational{1, 2};
      return -b / (2 * (2 * Rational{i} - 1));
    case SeriesKind::D: {
      const Rational ratio{2 * i + 1, 2 * i + 2};
      return Rational{i + 1, 2 * i + 1} * b * ratio * ratio;
    }
    case SeriesKind::Area:
      if (i == 0) return Rational{1};
      return -b / ((2 * Rational{i} - 1) * (Rational{i} + 1));
  }
  return Rational{0};
}

std::optional<Rational> SeriesTarget::value_at_one() const {
  switch (kind_) {
    case SeriesKind::E: return Rational{1};
    case SeriesKind::Area: return Rational{8, 3};
    default: return std::nullopt;
  }
}

double SeriesTarget::value(double x) const {
  const double ax = std::abs(x);
  switch (kind_) {
    case SeriesKind::K: return complete_K(Modulus{ax});
    case SeriesKind::E: return complete_E(Modulus{ax});
    case SeriesKind::D: return complete_D(Modulus{ax});
    case SeriesKind::Area: return area_function(ax);
  }
  return 0.0;
}

SeriesSum series_eval(const SeriesTarget& target, double x, double tol, std::uint64_t max_terms) {
  const double ax = std::abs(x);
  if (!(ax <= 1.0) || (ax == 1.0 && !target.value_at_one())) {
    throw DomainError(std::string("series for ") + std::string(to_string(target.kind())) +
                      " does not converge at x = " + std::to_string(x));
  }
  if (!(tol > 0.0)) throw DomainError("series tolerance must be positive");

  TermGenerator gen(target.kind(), ax);
  CompensatedSum sum;
  SeriesSum out;
  double last_signed = 0.0;
  while (gen.index() < max_terms) {
    const double term = gen.next();
    sum.add(term);
    last_signed = term;
    out.last_term = std::abs(term);
    // the constant term of E and Area says nothing about the decay
    if (gen.index() > 1 && out.last_term < tol) {
      out.converged = true;
      break;
    }
  }
  out.terms = gen.index();
  out.partial_sum = sum.value();
  if (ax == 1.0 && out.terms > 1) {
    const double n = static_cast<double>(out.terms - 1);  // index of the last term
    const double p = endpoint_decay(target.kind());
    out.tail_estimate = last_signed * (n / (p - 1.0) - 0.5 + p / (12.0 * n));
  }
  out.value = out.partial_sum + out.tail_estimate;
  return out;
}

double series_partial_sum(const SeriesTarget& target, double x, std::uint64_t terms) {
  TermGenerator gen(target.kind(), x);
  CompensatedSum sum;
  while (gen.index() < terms) sum.add(gen.next());
  return sum.value();
}

double area_function(double k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("area modulus must lie in [0, 1], got " + std::to_string(k));
  }
  if (k == 0.0) return kPi;
  if (k == 1.0) return 8.0 / 3.0;
  if (k > kAreaSeriesCutoff) {
    return series_eval(SeriesTarget{SeriesKind::Area}, k, 1e-18).value;
  }
  const Modulus m{k};
  return 4.0 / 3.0 * (complete_K(m) + complete_E(m) - complete_D(m));
}

}  // namespace egg
