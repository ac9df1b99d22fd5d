#include "koebe/polynomial.hpp"

#include <algorithm>

namespace koebe {

RealPolynomial::RealPolynomial(std::vector<Real> coefficients)
    : coeffs_(std::move(coefficients)) {}

RealPolynomial RealPolynomial::from_integers(std::span<const long> coefficients,
                                             Precision prec) {
  std::vector<Real> c;
  c.reserve(coefficients.size());
  for (long v : coefficients) c.emplace_back(v, prec);
  RealPolynomial p(std::move(c));
  p.normalize();
  return p;
}

Precision RealPolynomial::precision() const {
  Precision prec = 0;
  for (const auto& c : coeffs_) prec = std::max(prec, c.precision());
  return prec == 0 ? kDefaultPrecision : prec;
}

void RealPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_exact_zero()) coeffs_.pop_back();
}

RealPolynomial RealPolynomial::with_precision(Precision prec) const {
  std::vector<Real> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x.with_precision(prec));
  return RealPolynomial(std::move(c));
}

Real RealPolynomial::evaluate(const Real& x) const {
  Real acc(x.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Complex RealPolynomial::evaluate(const Complex& z) const {
  Complex acc(z.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += Complex(*it, Real(it->precision()));
  }
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Real> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  RealPolynomial p(std::move(d));
  p.normalize();
  return p;
}

bool RealPolynomial::parity_exact_zero(int parity) const {
  for (std::size_t k = static_cast<std::size_t>(parity); k < coeffs_.size(); k += 2) {
    if (!coeffs_[k].is_exact_zero()) return false;
  }
  return true;
}

RealPolynomial& RealPolynomial::operator+=(const RealPolynomial& rhs) {
  const Precision prec = std::max(precision(), rhs.precision());
  while (coeffs_.size() < rhs.coeffs_.size()) coeffs_.emplace_back(prec);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

RealPolynomial& RealPolynomial::operator-=(const RealPolynomial& rhs) {
  const Precision prec = std::max(precision(), rhs.precision());
  while (coeffs_.size() < rhs.coeffs_.size()) coeffs_.emplace_back(prec);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

RealPolynomial& RealPolynomial::operator*=(const Real& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

RealPolynomial operator*(const RealPolynomial& lhs, const RealPolynomial& rhs) {
  if (lhs.empty() || rhs.empty()) return {};
  const Precision prec = std::max(lhs.precision(), rhs.precision());
  std::vector<Real> out(lhs.size() + rhs.size() - 1, Real(prec));
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i].is_exact_zero()) continue;
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      if (rhs[j].is_exact_zero()) continue;
      out[i + j] += lhs[i] * rhs[j];
    }
  }
  RealPolynomial p(std::move(out));
  p.normalize();
  return p;
}

}  // namespace koebe
