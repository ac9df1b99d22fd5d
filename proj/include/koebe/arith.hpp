#pragma once

// Midpoint-radius ("ball") arithmetic over MPFR.
//
// A Real holds an MPFR midpoint at the working precision and an upward-rounded
// radius; the true value lies in [mid - rad, mid + rad]. Every operation
// returns a ball containing op(a, b) for all a, b in the operand balls.
// Results that MPFR reports as exact keep a zero radius, so structural zeros
// (exact 0 times anything, sums of exact zeros) stay exact.

#include <mpfr.h>

#include <algorithm>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>

namespace koebe {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kDefaultPrecisionCap = 8192;

class Real {
 public:
  /// Exact zero.
  explicit Real(Precision prec = kDefaultPrecision);
  /// Exact integer (rounded with radius if it does not fit in `prec` bits).
  Real(long value, Precision prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real ratio(long num, long den, Precision prec);
  /// Exact when prec >= 53.
  static Real from_double(double value, Precision prec);
  /// Decimal string, rounded to nearest with a one-ulp radius unless exact.
  static Real from_decimal(const std::string& text, Precision prec);
  /// Ball spanning [lo, hi] (lo <= hi).
  static Real from_bounds(const mpfr_t lo, const mpfr_t hi, Precision prec);
  /// Cached per precision.
  static Real pi(Precision prec);

  Precision precision() const { return mpfr_get_prec(mid_); }
  /// Same midpoint re-rounded to `prec` bits; radius grows by the rounding error.
  Real with_precision(Precision prec) const;

  mpfr_srcptr mid() const { return mid_; }
  mpfr_srcptr rad() const { return rad_; }
  double mid_double() const;
  /// Radius rounded up to a double.
  double rad_double() const;
  /// Enclosure endpoints rounded outward to doubles.
  double lower_double() const;
  double upper_double() const;

  /// The midpoint as an exact ball.
  Real midpoint() const;
  /// radius < 2^exp2
  bool radius_below(long exp2) const { return mpfr_cmp_ui_2exp(rad_, 1, exp2) < 0; }

  bool is_exact() const { return mpfr_zero_p(rad_) != 0; }
  bool is_exact_zero() const { return is_exact() && mpfr_zero_p(mid_) != 0; }
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool contains_zero() const { return !certainly_positive() && !certainly_negative(); }
  bool contains(double value) const;
  /// True when `inner` lies inside this ball.
  bool contains(const Real& inner) const;
  bool overlaps(const Real& other) const;
  /// Every member of *this is below every member of `other`.
  bool certainly_less(const Real& other) const;

  /// Midpoint in scientific notation with `digits` significant digits.
  std::string decimal(int digits = 17) const;
  /// Radius in scientific notation (rounded up, 3 significant digits).
  std::string radius_decimal() const;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, long rhs);
  friend Real operator*(long lhs, Real rhs) { return std::move(rhs) * lhs; }
  friend Real operator/(Real lhs, long rhs);

  /// Multiply by 2^exp (exact).
  Real ldexp(long exp) const;
  /// Binary exponent of the midpoint (0 for a zero midpoint).
  long exponent() const;

  friend Real abs(const Real& x);
  friend Real sqr(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real sin(const Real& x);
  friend Real cos(const Real& x);
  friend Real atan(const Real& x);
  /// Smallest ball containing both arguments.
  friend Real hull(const Real& a, const Real& b);

 private:
  // Adds the error of a rounded midpoint operation whose MPFR ternary value
  // was `ternary`.
  void add_rounding_error(int ternary);

  mpfr_t mid_;
  mpfr_t rad_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

class Complex {
 public:
  explicit Complex(Precision prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  /// e^{i t}
  static Complex expi(const Real& t);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Precision precision() const { return std::max(re_.precision(), im_.precision()); }

  Complex conj() const { return {re_, -im_}; }
  /// |z|^2 with a nonnegative enclosure.
  Real norm() const { return sqr(re_) + sqr(im_); }
  Real abs() const;
  bool overlaps(const Complex& other) const {
    return re_.overlaps(other.re_) && im_.overlaps(other.im_);
  }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);

  friend Complex operator+(Complex lhs, const Complex& rhs) { return lhs += rhs; }
  friend Complex operator-(Complex lhs, const Complex& rhs) { return lhs -= rhs; }
  friend Complex operator*(Complex lhs, const Complex& rhs) { return lhs *= rhs; }
  friend Complex operator*(Complex lhs, const Real& rhs) { return lhs *= rhs; }

 private:
  Real re_;
  Real im_;
};

enum class TrigKind { Sin, Cos };

/// sin or cos of numerator*pi/denominator. Values that are rational
/// (0, +-1/2, +-1) come back exact.
Real trig_constant(TrigKind kind, long numerator, long denominator, Precision prec);

enum class Sign { Negative, Zero, Positive, Undecided };

const char* to_string(Sign sign);

/// Sign of a ball without escalation: Zero only for an exact zero.
Sign sign_of(const Real& x);

/// Decides the sign of `x`, recomputing it through `refine` at doubled
/// precision while the enclosure still straddles zero. Returns Undecided once
/// the next precision would exceed `max_precision`.
Sign certified_sign(const Real& x, Precision max_precision,
                    const std::function<Real(Precision)>& refine);

}  // namespace koebe
