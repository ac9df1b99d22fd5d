#pragma once

// Monotonicity certificate for |P_N(e^{it})| on [0, pi].
//
// Substituting e^{it} = (1+ix)/(1-ix) (t = 2 arctan x) turns
// R_N(x) = |P_N(e^{it})|^2 into T_N(x) / (scale (1+x^2)^(N-1)) with T_N an
// even polynomial of degree 2(N-1). R_N' has the sign of
//   Delta_N(x) = T_N'(x)(1+x^2) - 2(N-1) x T_N(x),
// an odd polynomial. R_N is strictly decreasing on (0, inf) iff Delta_N/x
// has no positive root and is negative somewhere there; the root count is
// done by Sturm sequences on Delta_N/x written in y = x^2.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koebe/arith.hpp"
#include "koebe/execution.hpp"
#include "koebe/polynomial.hpp"

namespace koebe {

struct PullbackRational {
  /// T_N: even, degree 2(N-1), odd coefficients exactly zero.
  RealPolynomial numerator;
  /// N - 1
  int denom_power = 0;
  /// R_N(x) = numerator(x) / (scale * (1+x^2)^denom_power); scale = 4.
  Real scale;

  /// R_N(x) evaluated through the rational form.
  Real evaluate(const Real& x) const;
};

enum class Verdict { CertifiedMonotoneDecreasing, TriviallyUnivalent, NotCertified };

const char* to_string(Verdict verdict);

struct UnivalenceCertificate {
  int n = 0;
  /// Distinct roots of Delta_N on (0, inf); nullopt when undecided.
  std::optional<int> root_count_pos_axis;
  Sign interior_sign = Sign::Undecided;
  int stripped_zero_order = 0;
  Verdict verdict = Verdict::NotCertified;
  Precision precision_used = 0;
  double wall_time_seconds = 0.0;

  bool certified() const { return verdict != Verdict::NotCertified; }
};

/// T_N computed from Q(x) = sum a_k (1+ix)^k (1-ix)^(N-k): T_N = 4 |Q|^2 / (1+x^2).
/// Throws std::runtime_error if the division leaves a remainder that is not
/// consistent with zero.
PullbackRational pullback_tn(int n, Precision prec = kDefaultPrecision);

/// Delta_N = T'(1+x^2) - 2(N-1) x T.
RealPolynomial delta_n(const PullbackRational& t);

/// Removes the largest x^m dividing p (counting exact-zero low coefficients).
std::pair<RealPolynomial, int> strip_zero_root(const RealPolynomial& p);

/// q(x) = e(x^2) for an even q; throws std::logic_error if an odd
/// coefficient of q is not an exact zero.
RealPolynomial even_part_in_square(const RealPolynomial& q);

/// Runs the certificate at `start_precision`, doubling until every sign is
/// decided or `precision_cap` is exceeded. N = 1 is reported as
/// TriviallyUnivalent (P_1 = z, Delta_1 == 0).
UnivalenceCertificate certify_univalence(int n, Precision precision_cap = kDefaultPrecisionCap,
                                         Precision start_precision = kDefaultPrecision);

/// certify_univalence for every N in [first, last], ordered by N.
std::vector<UnivalenceCertificate> certify_range(int first, int last,
                                                 Precision precision_cap = kDefaultPrecisionCap,
                                                 Execution exec = Execution::Parallel);

}  // namespace koebe
