#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace egg {

using Rational = boost::multiprecision::cpp_rational;

/// An exact number of the form  rational + pi_multiple * pi.
///
/// Every series coefficient and every endpoint correction constant that
/// appears in the approximation tables has this shape, so they can be
/// compared without rounding.
struct PiLinear {
  Rational rational{0};
  Rational pi_multiple{0};

  static PiLinear pi(Rational m) { return {Rational{0}, std::move(m)}; }
  static PiLinear plain(Rational r) { return {std::move(r), Rational{0}}; }

  [[nodiscard]] double value() const;
  [[nodiscard]] bool is_zero() const { return rational == 0 && pi_multiple == 0; }

  /// Renders as "p/q", "p/q·π" or "p/q - r/s·π".
  [[nodiscard]] std::string to_string() const;

  friend PiLinear operator+(const PiLinear& l, const PiLinear& r) {
    return {l.rational + r.rational, l.pi_multiple + r.pi_multiple};
  }
  friend PiLinear operator-(const PiLinear& l, const PiLinear& r) {
    return {l.rational - r.rational, l.pi_multiple - r.pi_multiple};
  }
  friend PiLinear operator*(const PiLinear& l, const Rational& s) {
    return {l.rational * s, l.pi_multiple * s};
  }
  friend bool operator==(const PiLinear& l, const PiLinear& r) {
    return l.rational == r.rational && l.pi_multiple == r.pi_multiple;
  }
};

[[nodiscard]] std::string to_string(const Rational& r);
[[nodiscard]] double to_double(const Rational& r);

/// Parses "p/q" or "p" into an exact rational.
[[nodiscard]] Rational parse_rational(const std::string& text);

}  // namespace egg
