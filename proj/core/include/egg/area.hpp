#pragma once

#include <cstdint>

#include "egg/curve.hpp"
#include "egg/elliptic.hpp"
#include "egg/oracle.hpp"
#include "egg/series.hpp"
#include "egg/taylor.hpp"

namespace egg {

/// Area of the egg oval and its split at the extreme abscissa u.
/// All values are in squared length units of the parameters.
struct AreaBreakdown {
  double total;  // part1 + part2
  double part1;  // region bounded by the arc for t in [π/2, π]
  double part2;  // region bounded by the arc for t in [0, π/2]
  double scale;  // abq
  double k;
};

/// Closed-form auxiliary integrals over [0, π/2]:
///   1: int sin²t cos t = 1/3
///   2: int sin²t sqrt(1 - k² sin²t)  = ((1 - k²)K + (2k² - 1)E) / (3k²)
///   3: int sin²t cos²t / sqrt(1 - k² sin²t) = ((2k² - 2)K + (2 - k²)E) / (3k⁴)
/// Indices 2 and 3 require 0 < k < 1.
[[nodiscard]] double integral_I(int index, double k);

struct JRelationMargins {
  double j1;  // |J_1 + 1/3|
  double j2;  // |J_2 - I_2|
  double j3;  // |J_3 - I_3|

  [[nodiscard]] double max() const;
};

/// Integrates J_1..J_3 over [π/2, π] by quadrature and compares them with
/// -1/3 and the closed forms of I_2, I_3.
[[nodiscard]] JRelationMargins check_J_relations(double k, const oracle::QuadratureSpec& spec = {});

/// total = (4/3) abq ((1 - 1/k²)K + (1 + 1/k²)E), part2 - part1 = (8/3) abq k.
/// For k = 1 (w = a) the limit 8abq/3 is returned, with part1 = 0.
[[nodiscard]] AreaBreakdown area_exact(const CurveParams& params);

/// abq·π·(1 - Σ_{i>=1} b_i/((2i-1)(i+1)) k^{2i}) summed until a term < tol.
[[nodiscard]] double area_series(const CurveParams& params, double tol,
                                 std::uint64_t max_terms = kMaxSeriesTerms);

/// The same series as a function of the modulus alone (scale abq = 1),
/// defined on the closed interval [0, 1].
[[nodiscard]] SeriesSum area_series_of_modulus(double k, double tol,
                                               std::uint64_t max_terms = kMaxSeriesTerms);

/// Taylor approximant of the area at the curve's modulus. First kind bounds
/// the area from above, second kind (β in (0, 1]) from below.
[[nodiscard]] double area_taylor(const CurveParams& params, unsigned n, ApproxKind kind,
                                 double beta = 1.0);

struct BoundsCertificate {
  double exact;
  double lower_coarse;    // 8abq/3
  double upper_coarse;    // πabq
  double lower_refined;   // second-kind approximant of degree 1 at β = 1
  double upper_refined;   // first-kind approximant of degree 2
  double delta;           // abq(π - 8/3)(1 - k), lower_refined - lower_coarse
  double nabla;           // (π/8) abq k², upper_coarse - upper_refined
  double nabla_piecewise; // πbw²/(8a) for w <= a, πa⁴b/(8w³) for w > a
  double delta_pi_form;   // abqπ(1 - k), the variant that breaks the ordering
  double lower_pi_form;   // 8abq/3 + delta_pi_form
  bool pi_form_consistent;  // lower_pi_form <= exact

  /// lower_coarse <= lower_refined <= exact <= upper_refined <= upper_coarse
  [[nodiscard]] bool ordered() const;
  /// The same chain with every inequality strict.
  [[nodiscard]] bool strictly_ordered() const;
};

[[nodiscard]] BoundsCertificate bounds(const CurveParams& params);

struct InvPiPartial {
  double value;      // (3/8)(1 - Σ_{i=1}^N b_i/((2i-1)(i+1)))
  double last_term;  // (3/8) b_N/((2N-1)(N+1))
};

/// Partial sums of the series 1/π = (3/8)(1 - Σ_{i>=1} b_i/((2i-1)(i+1))).
/// They decrease strictly toward 1/π. Requires N >= 1.
[[nodiscard]] InvPiPartial inv_pi_partial(std::uint64_t terms);

}  // namespace egg
