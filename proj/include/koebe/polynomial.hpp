#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "koebe/arith.hpp"

namespace koebe {

/// Dense univariate polynomial; coefficient k multiplies x^k (or z^k).
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<Real> coefficients);

  /// Polynomial with exact integer coefficients.
  static RealPolynomial from_integers(std::span<const long> coefficients, Precision prec);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const Real& operator[](std::size_t k) const { return coeffs_[k]; }
  Real& operator[](std::size_t k) { return coeffs_[k]; }
  const Real& leading() const { return coeffs_.back(); }
  std::span<const Real> coefficients() const { return coeffs_; }
  Precision precision() const;

  /// Drops trailing coefficients that are exactly zero.
  void normalize();
  /// All coefficients re-rounded to `prec` bits.
  RealPolynomial with_precision(Precision prec) const;

  Real evaluate(const Real& x) const;
  Complex evaluate(const Complex& z) const;
  RealPolynomial derivative() const;

  /// Every coefficient whose index has parity `parity` (0 even, 1 odd) is an
  /// exact zero.
  bool parity_exact_zero(int parity) const;

  RealPolynomial& operator+=(const RealPolynomial& rhs);
  RealPolynomial& operator-=(const RealPolynomial& rhs);
  RealPolynomial& operator*=(const Real& scalar);

  friend RealPolynomial operator+(RealPolynomial lhs, const RealPolynomial& rhs) {
    return lhs += rhs;
  }
  friend RealPolynomial operator-(RealPolynomial lhs, const RealPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend RealPolynomial operator*(RealPolynomial lhs, const Real& scalar) {
    return lhs *= scalar;
  }
  friend RealPolynomial operator*(const RealPolynomial& lhs, const RealPolynomial& rhs);

 private:
  std::vector<Real> coeffs_;
};

}  // namespace koebe
