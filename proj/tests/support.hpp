#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "koebe/arith.hpp"
#include "koebe/polynomial.hpp"

namespace test {

using koebe::Precision;
using koebe::Real;
using koebe::RealPolynomial;

inline Real sqrt_of(long v, Precision prec) { return sqrt(Real(v, prec)); }

inline Real sin_pi(long num, long den, Precision prec) {
  return koebe::trig_constant(koebe::TrigKind::Sin, num, den, prec);
}

inline Real cos_pi(long num, long den, Precision prec) {
  return koebe::trig_constant(koebe::TrigKind::Cos, num, den, prec);
}

/// |a - b| <= tol * |b|, judged on enclosure endpoints.
inline bool rel_close(const Real& a, const Real& b, double tol) {
  return abs(a - b).upper_double() <= tol * abs(b).lower_double();
}

/// width = 2 * radius
inline double width(const Real& x) { return 2 * x.rad_double(); }

/// Coefficientwise agreement of `ours` with `golden` up to one positive
/// scalar, fixed by the leading coefficients.
inline bool proportional(const RealPolynomial& ours, const std::vector<Real>& golden, double tol,
                         Real* scale_out = nullptr) {
  if (ours.size() != golden.size()) return false;
  const Real scale = ours.leading() / golden.back();
  if (!scale.certainly_positive()) return false;
  if (scale_out) *scale_out = scale;
  for (std::size_t k = 0; k < golden.size(); ++k) {
    if (golden[k].is_exact_zero()) {
      if (!ours[k].contains_zero()) return false;
      continue;
    }
    if (!rel_close(ours[k], golden[k] * scale, tol)) return false;
  }
  return true;
}

/// Deterministic generator shared by the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace test
