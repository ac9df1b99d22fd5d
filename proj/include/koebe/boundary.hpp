#pragma once

// The image of the unit circle under a real-coefficient polynomial: sampled
// curves and the numeric minimum distance to the origin.

#include <optional>
#include <vector>

#include "koebe/arith.hpp"
#include "koebe/execution.hpp"
#include "koebe/families.hpp"
#include "koebe/polynomial.hpp"

namespace koebe {

struct CurveSample {
  double t = 0;
  double re = 0;
  double im = 0;
  double abs = 0;
};

struct BoundaryCurve {
  /// Uniform grid t_i = 2 pi i / count, i = 0..count-1.
  std::vector<CurveSample> samples;
  std::optional<FamilySpec> polynomial_id;
};

/// Evaluates p on [0, pi] and mirrors the rest by conjugate symmetry.
BoundaryCurve sample_curve(const RealPolynomial& p, int count,
                           std::optional<FamilySpec> id = std::nullopt,
                           Execution exec = Execution::Parallel);

struct MinDistanceResult {
  /// Final golden-section bracket.
  Real t_star;
  /// Enclosure of |p(e^{it})| over every t in t_star.
  Real distance;
  /// t_star contains pi.
  bool attained_at_minus1 = false;
  /// False when the refinement hit its iteration limit before reaching the
  /// requested relative width; the result is still the best bracket found.
  bool converged = true;
};

inline constexpr int kDefaultMinGrid = 4096;
inline constexpr double kDefaultRefineTolerance = 0x1p-48;

/// Grid scan of |p|^2 on [0, pi] (double precision) followed by golden-section
/// refinement of the best bracketing triple at the working precision. This is a numeric minimum, not a certified global
/// one.
MinDistanceResult min_distance(const RealPolynomial& p, int grid = kDefaultMinGrid,
                               double relative_tolerance = kDefaultRefineTolerance,
                               Execution exec = Execution::Parallel);

struct TypicallyRealResult {
  /// No sampled Im p(e^{it}), t in (0, pi), is certainly negative.
  bool ok = true;
  std::optional<double> witness_t;
};

TypicallyRealResult typically_real_check(const RealPolynomial& p, int grid,
                                         Execution exec = Execution::Parallel);

}  // namespace koebe
