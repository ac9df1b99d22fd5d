#pragma once

// Sturm-sequence root counting over ball coefficients.
//
// The chain is built with signed pseudo-remainders, so exact (integer or
// dyadic) inputs stay exact while the working precision holds their growing
// mantissas, and a vanishing remainder is recognised as an exact zero. Each
// remainder is rescaled by a power of two to keep exponents bounded.
//
// When the chain ends early in a nonconstant gcd (p not squarefree) the sign
// variations of the unreduced chain still count distinct roots, as long as
// the endpoints are not roots of p.

#include <optional>
#include <vector>

#include "koebe/arith.hpp"
#include "koebe/polynomial.hpp"

namespace koebe {

struct SturmInterval {
  enum class Kind { PositiveAxis, Bounded };
  Kind kind = Kind::PositiveAxis;
  /// Used only for Kind::Bounded: the open interval (lo, hi).
  Real lo;
  Real hi;

  static SturmInterval positive_axis() { return SturmInterval(); }
  static SturmInterval bounded(Real lo, Real hi) {
    SturmInterval out;
    out.kind = Kind::Bounded;
    out.lo = std::move(lo);
    out.hi = std::move(hi);
    return out;
  }
};

/// The chain p, p', -rem(p, p'), ... up to positive scalar factors, or
/// nullopt if a leading coefficient cannot be separated from zero at the
/// current precision.
std::optional<std::vector<RealPolynomial>> sturm_sequence(const RealPolynomial& p);

/// Sign variations of `chain` at 0+ (PositiveAxis lower end), at +infinity,
/// or at a point. Exact zeros are skipped; nullopt when a sign is undecided.
std::optional<int> variations_at_zero_plus(const std::vector<RealPolynomial>& chain);
std::optional<int> variations_at_infinity(const std::vector<RealPolynomial>& chain);
std::optional<int> variations_at(const std::vector<RealPolynomial>& chain, const Real& x);

/// Number of distinct real roots of p in the open interval, or nullopt
/// (undecided). Inputs with exact coefficients are retried at doubled
/// precision up to `max_precision` (default: no escalation).
std::optional<int> sturm_count(const RealPolynomial& p, const SturmInterval& interval,
                               Precision max_precision = 0);

}  // namespace koebe
