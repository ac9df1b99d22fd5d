#include "koebe/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace koebe {

namespace {

// lc(b)^(deg a - deg b + 1) * a  mod  b
RealPolynomial pseudo_remainder(const RealPolynomial& a, const RealPolynomial& b) {
  std::vector<Real> r(a.coefficients().begin(), a.coefficients().end());
  const int n = b.degree();
  const Real& lc = b.leading();
  for (int i = a.degree(); i >= n; --i) {
    const Real lead = r[static_cast<std::size_t>(i)];
    for (int k = 0; k < i; ++k) r[static_cast<std::size_t>(k)] *= lc;
    if (!lead.is_exact_zero()) {
      for (int k = 0; k < n; ++k) {
        r[static_cast<std::size_t>(k + i - n)] -= lead * b[static_cast<std::size_t>(k)];
      }
    }
    r.pop_back();
  }
  RealPolynomial out(std::move(r));
  out.normalize();
  return out;
}

// Divides by a power of two so the largest midpoint is in [1/2, 1).
RealPolynomial rescaled(const RealPolynomial& p) {
  long top = 0;
  bool any = false;
  for (const auto& c : p.coefficients()) {
    if (c.is_exact_zero()) continue;
    top = any ? std::max(top, c.exponent()) : c.exponent();
    any = true;
  }
  if (!any || top == 0) return p;
  std::vector<Real> c;
  c.reserve(p.size());
  for (const auto& x : p.coefficients()) c.push_back(x.ldexp(-top));
  return RealPolynomial(std::move(c));
}

std::optional<int> count_variations(const std::vector<Sign>& signs) {
  int changes = 0;
  Sign last = Sign::Zero;
  for (Sign s : signs) {
    if (s == Sign::Undecided) return std::nullopt;
    if (s == Sign::Zero) continue;
    if (last != Sign::Zero && s != last) ++changes;
    last = s;
  }
  return changes;
}

bool all_exact(const RealPolynomial& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const Real& c) { return c.is_exact(); });
}

std::optional<int> count_once(const RealPolynomial& p, const SturmInterval& interval) {
  const auto chain = sturm_sequence(p);
  if (!chain) return std::nullopt;
  if (interval.kind == SturmInterval::Kind::PositiveAxis) {
    const auto lo = variations_at_zero_plus(*chain);
    const auto hi = variations_at_infinity(*chain);
    if (!lo || !hi) return std::nullopt;
    return *lo - *hi;
  }
  const Real at_lo = p.evaluate(interval.lo);
  const Real at_hi = p.evaluate(interval.hi);
  if (at_lo.contains_zero() || at_hi.contains_zero()) return std::nullopt;
  const auto lo = variations_at(*chain, interval.lo);
  const auto hi = variations_at(*chain, interval.hi);
  if (!lo || !hi) return std::nullopt;
  return *lo - *hi;
}

}  // namespace

std::optional<std::vector<RealPolynomial>> sturm_sequence(const RealPolynomial& input) {
  RealPolynomial p = input;
  p.normalize();
  if (p.empty()) throw std::invalid_argument("sturm_sequence: zero polynomial");
  if (p.leading().contains_zero()) return std::nullopt;

  std::vector<RealPolynomial> chain;
  chain.push_back(p);
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative());

  while (chain.back().degree() > 0) {
    const RealPolynomial& a = chain[chain.size() - 2];
    const RealPolynomial& b = chain.back();
    RealPolynomial r = pseudo_remainder(a, b);
    if (r.empty()) break;  // b is the gcd of p and p'
    if (r.leading().contains_zero()) return std::nullopt;
    // -rem(a, b) = -r / lc(b)^(delta+1): flip unless that power is negative.
    const int power = a.degree() - b.degree() + 1;
    const bool lc_negative = b.leading().certainly_negative();
    if (!(lc_negative && power % 2 == 1)) r *= Real(-1, r.precision());
    chain.push_back(rescaled(r));
  }
  return chain;
}

std::optional<int> variations_at_zero_plus(const std::vector<RealPolynomial>& chain) {
  std::vector<Sign> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    Sign s = Sign::Zero;
    for (const auto& c : q.coefficients()) {
      if (c.is_exact_zero()) continue;
      s = sign_of(c);
      break;
    }
    signs.push_back(s);
  }
  return count_variations(signs);
}

std::optional<int> variations_at_infinity(const std::vector<RealPolynomial>& chain) {
  std::vector<Sign> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q.empty() ? Sign::Zero : sign_of(q.leading()));
  return count_variations(signs);
}

std::optional<int> variations_at(const std::vector<RealPolynomial>& chain, const Real& x) {
  std::vector<Sign> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_of(q.evaluate(x)));
  return count_variations(signs);
}

std::optional<int> sturm_count(const RealPolynomial& p, const SturmInterval& interval,
                               Precision max_precision) {
  RealPolynomial current = p;
  for (;;) {
    if (auto n = count_once(current, interval)) return n;
    const Precision next = current.precision() * 2;
    if (!all_exact(p) || next > max_precision) return std::nullopt;
    current = p.with_precision(next);
  }
}

}  // namespace koebe
