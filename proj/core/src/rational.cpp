#include "egg/rational.hpp"

#include <numbers>
#include <stdexcept>

namespace egg {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  using boost::multiprecision::cpp_int;
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational{cpp_int{text}};
    const cpp_int num{text.substr(0, slash)};
    const cpp_int den{text.substr(slash + 1)};
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational{num, den};
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

double PiLinear::value() const {
  return to_double(rational) + to_double(pi_multiple) * std::numbers::pi;
}

std::string PiLinear::to_string() const {
  if (pi_multiple == 0) return egg::to_string(rational);
  const Rational magnitude = abs(pi_multiple);
  const auto pi_part = magnitude == 1 ? std::string("π") : egg::to_string(magnitude) + "·π";
  if (rational == 0) return (pi_multiple < 0 ? "-" : "") + pi_part;
  return egg::to_string(rational) + (pi_multiple < 0 ? " - " : " + ") + pi_part;
}

}  // namespace egg
