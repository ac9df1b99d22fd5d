#include "koebe/families.hpp"

#include <stdexcept>
#include <vector>

namespace koebe {

namespace {

void require_degree(int n) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1, got " + std::to_string(n));
}

// (N - k + 1) / N
Real fejer_weight(int n, int k, Precision prec) { return Real::ratio(n - k + 1, n, prec); }

// sum_{k} w_k e^{ikt}, k = 0..weights.size()-1
Complex weighted_exponential_sum(const std::vector<Real>& weights, const Real& t) {
  Complex acc(t.precision());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    acc += Complex::expi(t * static_cast<long>(k)) * weights[k];
  }
  return acc;
}

}  // namespace

void FamilySpec::validate() const {
  require_degree(degree);
  if (family == Family::Suffridge && (j < 1 || j > degree)) {
    throw std::invalid_argument("suffridge index j must satisfy 1 <= j <= N (j=" +
                                std::to_string(j) + ", N=" + std::to_string(degree) + ")");
  }
}

std::string FamilySpec::label() const {
  std::string out(family_name(family));
  out += "(N=" + std::to_string(degree);
  if (family == Family::Suffridge) out += ",j=" + std::to_string(j);
  return out + ")";
}

Family parse_family(std::string_view name) {
  if (name == "fejer") return Family::Fejer;
  if (name == "alexander") return Family::Alexander;
  if (name == "suffridge") return Family::Suffridge;
  if (name == "egervary-szasz" || name == "es") return Family::EgervarySzasz;
  if (name == "pnew") return Family::PNew;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Fejer: return "fejer";
    case Family::Alexander: return "alexander";
    case Family::Suffridge: return "suffridge";
    case Family::EgervarySzasz: return "egervary-szasz";
    case Family::PNew: return "pnew";
  }
  return "pnew";
}

RealPolynomial alexander_coeffs(int n, Precision prec) {
  require_degree(n);
  std::vector<Real> c;
  c.emplace_back(prec);
  for (int k = 1; k <= n; ++k) c.push_back(Real::ratio(1, k, prec));
  return RealPolynomial(std::move(c));
}

RealPolynomial fejer_coeffs(int n, Precision prec) {
  require_degree(n);
  std::vector<Real> c;
  c.emplace_back(prec);
  for (int k = 1; k <= n; ++k) c.push_back(fejer_weight(n, k, prec));
  return RealPolynomial(std::move(c));
}

RealPolynomial suffridge_coeffs(int n, int j, Precision prec) {
  FamilySpec{Family::Suffridge, n, j}.validate();
  const Real base = trig_constant(TrigKind::Sin, j, n + 1, prec);
  std::vector<Real> c;
  c.emplace_back(prec);
  c.emplace_back(1, prec);
  for (int k = 2; k <= n; ++k) {
    c.push_back(fejer_weight(n, k, prec) *
                trig_constant(TrigKind::Sin, static_cast<long>(k) * j, n + 1, prec) / base);
  }
  return RealPolynomial(std::move(c));
}

Real egervary_szasz_bk(int n, int k, Precision prec) {
  require_degree(n);
  if (k < 0 || k > n) {
    throw std::invalid_argument("b_k index out of range: k=" + std::to_string(k) +
                                ", N=" + std::to_string(n));
  }
  if (k == 0) return Real(1, prec);
  const long m = n + 2;
  const Real upper = trig_constant(TrigKind::Sin, k + 1, m, prec) * static_cast<long>(n - k + 3);
  const Real lower = trig_constant(TrigKind::Sin, k - 1, m, prec) * static_cast<long>(n - k + 1);
  return (upper - lower) / (trig_constant(TrigKind::Sin, 1, m, prec) * m);
}

RealPolynomial egervary_szasz_coeffs(int n, Precision prec) {
  std::vector<Real> c;
  for (int k = 0; k <= n; ++k) c.push_back(egervary_szasz_bk(n, k, prec));
  return RealPolynomial(std::move(c));
}

RealPolynomial pnew_coeffs(int n, Precision prec) {
  require_degree(n);
  const long m = n + 2;
  std::vector<Real> raw;
  raw.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    raw.push_back(egervary_szasz_bk(n, k, prec) * trig_constant(TrigKind::Sin, k, m, prec));
  }
  std::vector<Real> c;
  c.emplace_back(prec);
  c.emplace_back(1, prec);
  for (int k = 2; k <= n; ++k) c.push_back(raw[k - 1] / raw[0]);
  return RealPolynomial(std::move(c));
}

RealPolynomial generate(const FamilySpec& spec, Precision prec) {
  spec.validate();
  switch (spec.family) {
    case Family::Fejer: return fejer_coeffs(spec.degree, prec);
    case Family::Alexander: return alexander_coeffs(spec.degree, prec);
    case Family::Suffridge: return suffridge_coeffs(spec.degree, spec.j, prec);
    case Family::EgervarySzasz: return egervary_szasz_coeffs(spec.degree, prec);
    case Family::PNew: return pnew_coeffs(spec.degree, prec);
  }
  throw std::invalid_argument("unknown family");
}

Real fejer_kernel(int n, const Real& t) {
  std::vector<Real> ones(static_cast<std::size_t>(n) + 1, Real(1, t.precision()));
  return weighted_exponential_sum(ones, t).norm() / static_cast<long>(n + 1);
}

Real fejer_kernel_cosine_sum(int n, const Real& t) {
  const Precision prec = t.precision();
  Real acc(0, prec);
  for (int k = 1; k <= n; ++k) {
    acc += Real::ratio(n + 1 - k, n + 1, prec) * cos(t * static_cast<long>(k));
  }
  return acc * 2L + Real(1, prec);
}

Real egervary_szasz_eval(int n, const Real& t) {
  const Precision prec = t.precision();
  std::vector<Real> weights;
  for (int k = 0; k <= n; ++k) weights.push_back(trig_constant(TrigKind::Sin, k + 1, n + 2, prec));
  return weighted_exponential_sum(weights, t).norm() * 2L / static_cast<long>(n + 2);
}

Real egervary_szasz_cosine_sum(int n, const Real& t) {
  const Precision prec = t.precision();
  Real acc(prec);
  for (int k = 0; k <= n; ++k) acc += egervary_szasz_bk(n, k, prec) * cos(t * static_cast<long>(k));
  return acc;
}

}  // namespace koebe
