#include "koebe/pullback.hpp"

#include <chrono>
#include <stdexcept>

#include "koebe/families.hpp"
#include "koebe/sturm.hpp"

namespace koebe {

namespace {

// Coefficients of (1+y)^k (1-y)^(n-k). Integers bounded by C(n, m), so they
// stay exact while n < prec.
std::vector<Real> binomial_product(int k, int n, Precision prec) {
  std::vector<Real> c{Real(1, prec)};
  auto multiply = [&c, prec](bool plus) {
    c.emplace_back(prec);
    for (std::size_t i = c.size() - 1; i > 0; --i) {
      if (plus) {
        c[i] += c[i - 1];
      } else {
        c[i] -= c[i - 1];
      }
    }
  };
  for (int i = 0; i < k; ++i) multiply(true);
  for (int i = k; i < n; ++i) multiply(false);
  return c;
}

const Real& coefficient_or(const RealPolynomial& p, long k, const Real& zero) {
  return (k >= 0 && k < static_cast<long>(p.size())) ? p[static_cast<std::size_t>(k)] : zero;
}

}  // namespace

Real PullbackRational::evaluate(const Real& x) const {
  const Real one_plus = Real(1, x.precision()) + sqr(x);
  Real denom = scale;
  for (int i = 0; i < denom_power; ++i) denom *= one_plus;
  return numerator.evaluate(x) / denom;
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::CertifiedMonotoneDecreasing: return "CertifiedMonotoneDecreasing";
    case Verdict::TriviallyUnivalent: return "TriviallyUnivalent";
    case Verdict::NotCertified: return "NotCertified";
  }
  return "NotCertified";
}

PullbackRational pullback_tn(int n, Precision prec) {
  if (n < 1) throw std::invalid_argument("pullback_tn: N must be >= 1");
  const RealPolynomial a = pnew_coeffs(n, prec);

  // Q(x) = sum_m q_m i^m x^m; split into A (even m) + i B (odd m).
  std::vector<Real> q(static_cast<std::size_t>(n) + 1, Real(prec));
  for (int k = 1; k <= n; ++k) {
    const auto e = binomial_product(k, n, prec);
    for (int m = 0; m <= n; ++m) {
      const auto i = static_cast<std::size_t>(m);
      if (!e[i].is_exact_zero()) q[i] += a[static_cast<std::size_t>(k)] * e[i];
    }
  }
  std::vector<Real> re(q.size(), Real(prec)), im(q.size(), Real(prec));
  for (int m = 0; m <= n; ++m) {
    const auto i = static_cast<std::size_t>(m);
    const bool negative = (m / 2) % 2 == 1;  // i^m = +-1 or +-i
    (m % 2 == 0 ? re : im)[i] = negative ? -q[i] : q[i];
  }
  const RealPolynomial real_part(std::move(re)), imag_part(std::move(im));
  RealPolynomial s = real_part * real_part + imag_part * imag_part;
  s *= Real(4, prec);

  // s = T (1 + x^2) + r1 x + r0
  const std::size_t len = 2 * static_cast<std::size_t>(n) + 1;
  std::vector<Real> sc(s.coefficients().begin(), s.coefficients().end());
  while (sc.size() < len) sc.emplace_back(prec);
  std::vector<Real> t(len - 2, Real(prec));
  for (std::size_t j = len - 1; j >= 2; --j) {
    Real v = sc[j];
    if (j < t.size()) v -= t[j];
    t[j - 2] = std::move(v);
  }
  const Real r1 = sc[1] - (t.size() > 1 ? t[1] : Real(prec));
  const Real r0 = sc[0] - t[0];
  if (!r0.contains_zero() || !r1.contains_zero()) {
    throw std::runtime_error("pullback_tn: |Q|^2 not divisible by 1+x^2 (N=" +
                             std::to_string(n) + ")");
  }
  RealPolynomial numerator(std::move(t));
  numerator.normalize();
  return {std::move(numerator), n - 1, Real(4, prec)};
}

RealPolynomial delta_n(const PullbackRational& tr) {
  const RealPolynomial& t = tr.numerator;
  const Precision prec = t.precision();
  const Real zero(prec);
  const long two_n = 2L * tr.denom_power;
  std::vector<Real> d;
  d.reserve(t.size() + 1);
  for (long j = 0; j <= static_cast<long>(t.size()); ++j) {
    Real v = coefficient_or(t, j + 1, zero) * (j + 1);
    v += coefficient_or(t, j - 1, zero) * (j - 1 - two_n);
    d.push_back(std::move(v));
  }
  RealPolynomial out(std::move(d));
  out.normalize();
  return out;
}

std::pair<RealPolynomial, int> strip_zero_root(const RealPolynomial& p) {
  std::size_t m = 0;
  while (m < p.size() && p[m].is_exact_zero()) ++m;
  if (m == p.size()) return {RealPolynomial(), 0};
  std::vector<Real> rest(p.coefficients().begin() + static_cast<std::ptrdiff_t>(m),
                         p.coefficients().end());
  return {RealPolynomial(std::move(rest)), static_cast<int>(m)};
}

RealPolynomial even_part_in_square(const RealPolynomial& q) {
  if (!q.parity_exact_zero(1)) {
    throw std::logic_error("even_part_in_square: odd coefficients are not exact zeros");
  }
  std::vector<Real> e;
  for (std::size_t k = 0; k < q.size(); k += 2) e.push_back(q[k]);
  return RealPolynomial(std::move(e));
}

UnivalenceCertificate certify_univalence(int n, Precision precision_cap,
                                         Precision start_precision) {
  if (n < 1) throw std::invalid_argument("certify_univalence: N must be >= 1");
  const auto started = std::chrono::steady_clock::now();
  UnivalenceCertificate cert;
  cert.n = n;
  auto finish = [&]() {
    cert.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return cert;
  };

  if (n == 1) {
    cert.root_count_pos_axis = 0;
    cert.interior_sign = Sign::Zero;
    cert.verdict = Verdict::TriviallyUnivalent;
    cert.precision_used = start_precision;
    return finish();
  }

  for (Precision prec = start_precision; prec <= precision_cap; prec *= 2) {
    cert.precision_used = prec;
    const RealPolynomial delta = delta_n(pullback_tn(n, prec));
    auto [reduced, order] = strip_zero_root(delta);
    cert.stripped_zero_order = order;
    cert.root_count_pos_axis =
        sturm_count(even_part_in_square(reduced), SturmInterval::positive_axis());
    cert.interior_sign = sign_of(delta.evaluate(Real(1, prec)));
    if (cert.root_count_pos_axis && cert.interior_sign != Sign::Undecided) break;
  }
  const bool monotone = cert.root_count_pos_axis == 0 && cert.interior_sign == Sign::Negative;
  cert.verdict = monotone ? Verdict::CertifiedMonotoneDecreasing : Verdict::NotCertified;
  return finish();
}

std::vector<UnivalenceCertificate> certify_range(int first, int last, Precision precision_cap,
                                                 Execution exec) {
  if (first < 1 || last < first) throw std::invalid_argument("certify_range: empty range");
  const int count = last - first + 1;
  std::vector<UnivalenceCertificate> out(static_cast<std::size_t>(count));
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = certify_univalence(first + i, precision_cap);
    }
  } else {
    for (int i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = certify_univalence(first + i, precision_cap);
    }
  }
  return out;
}

}  // namespace koebe
