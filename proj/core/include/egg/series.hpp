#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "egg/rational.hpp"

namespace egg {

/// The four even power series handled by the library:
///   K(x)    = π/2 Σ b_i x^{2i}
///   E(x)    = π/2 - π/2 Σ_{i>=1} b_i/(2i-1) x^{2i}
///   D(x)    = π Σ (i+1)/(2i+1) ((2i+1)!!/(2i+2)!!)² x^{2i}
///   Area(k) = π - π Σ_{i>=1} b_i/((2i-1)(i+1)) k^{2i}     (egg area divided by abq)
/// with b_i = ((2i-1)!!/(2i)!!)².
enum class SeriesKind { K, E, D, Area };

[[nodiscard]] std::string_view to_string(SeriesKind kind);
[[nodiscard]] std::optional<SeriesKind> parse_series_kind(std::string_view name);

/// Descriptor of a series-defined function of x on [0, 1].
class SeriesTarget {
 public:
  explicit SeriesTarget(SeriesKind kind) : kind_(kind) {}

  [[nodiscard]] SeriesKind kind() const { return kind_; }

  /// Exact coefficient of x^{2i}, as a signed multiple of π.
  [[nodiscard]] Rational coeff(unsigned i) const;

  [[nodiscard]] double radius() const { return 1.0; }

  /// f(1) for the series that converge at the endpoint (E -> 1, Area -> 8/3).
  [[nodiscard]] std::optional<Rational> value_at_one() const;

  /// The function itself, evaluated through the closed forms (AGM based).
  /// x must lie in [0, 1), or [0, 1] when value_at_one() exists.
  [[nodiscard]] double value(double x) const;

  friend bool operator==(const SeriesTarget&, const SeriesTarget&) = default;

 private:
  SeriesKind kind_;
};

/// Coefficient of x^{2i} in the series of `target`, an exact multiple of π.
[[nodiscard]] inline Rational series_coeff(const SeriesTarget& target, unsigned i) {
  return target.coeff(i);
}

struct SeriesSum {
  double value = 0.0;           // partial sum plus tail_estimate
  double partial_sum = 0.0;     // plain sum of the terms taken
  double tail_estimate = 0.0;   // nonzero only at |x| = 1
  double last_term = 0.0;       // magnitude of the last term added
  std::uint64_t terms = 0;
  bool converged = false;       // false when the term cap was hit first
};

inline constexpr std::uint64_t kMaxSeriesTerms = 10'000'000;

/// Sums the series at x until a term of magnitude below `tol` has been added.
///
/// At |x| = 1 the terms decay only algebraically (like i^-2 for E, i^-3 for
/// Area), so the remainder is estimated from the last term by the
/// Euler-Maclaurin tail of a pure power law and reported separately.
/// Throws DomainError for |x| >= 1 unless the series converges at 1.
[[nodiscard]] SeriesSum series_eval(const SeriesTarget& target, double x, double tol,
                                    std::uint64_t max_terms = kMaxSeriesTerms);

/// Plain partial sum of the first `terms` terms (indices 0..terms-1), with no
/// domain check. Used to exhibit divergence at x = 1.
[[nodiscard]] double series_partial_sum(const SeriesTarget& target, double x,
                                        std::uint64_t terms);

/// Scale-free egg area A(k)/abq on [0, 1]: π at 0, 8/3 at 1, and
/// 4/3 (K + E - D) in between. Above kAreaSeriesCutoff the series is used.
[[nodiscard]] double area_function(double k);

inline constexpr double kAreaSeriesCutoff = 0.99;

}  // namespace egg
