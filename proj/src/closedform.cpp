#include "koebe/closedform.hpp"

#include <cmath>

#include "koebe/families.hpp"

namespace koebe {

namespace {

// t reduced to [0, pi] (up to midpoint rounding); `conjugate` records whether
// the value at the original t is the conjugate of the value at the reduced t.
struct Reduced {
  Real t;
  bool conjugate = false;
};

Reduced reduce_to_half_period(const Real& t) {
  const Precision prec = t.precision();
  const Real pi = Real::pi(prec);
  const Real two_pi = pi * 2L;
  Real r = t;
  const double turns = std::floor(t.mid_double() / two_pi.mid_double());
  if (turns != 0.0) r -= two_pi * static_cast<long>(turns);
  if (r.certainly_negative()) r += two_pi;
  if (mpfr_cmp(r.mid(), pi.mid()) > 0) return {two_pi - r, true};
  return {std::move(r), false};
}

// Quantities shared by the closed forms at a reduced t.
struct ClosedFormTerms {
  Real cos_t;
  Real sin_t;
  Real c;         // cos(2pi/(N+2))
  Real d;         // cos t - c
  Real half_arg;  // (N+2) t / 2
  long m;         // N + 2
};

ClosedFormTerms terms(int n, const Real& t) {
  const Precision prec = t.precision();
  const long m = n + 2;
  Real c = trig_constant(TrigKind::Cos, 2, m, prec);
  Real cos_t = cos(t);
  Real d = cos_t - c;
  return {std::move(cos_t), sin(t), std::move(c), std::move(d), t * m / 2L, m};
}

bool near_zero(const Real& x, const Real& band) {
  return !(band.certainly_less(x) || x.certainly_less(-band));
}

bool guard_band_hit(const ClosedFormTerms& ct, Precision prec) {
  const Real band = Real(1, prec).ldexp(-static_cast<long>(prec / 4));
  return near_zero(ct.d, band) || near_zero(Real(1, prec) - ct.cos_t, band);
}

Complex maybe_conj(Complex z, bool conjugate) { return conjugate ? z.conj() : z; }

}  // namespace

Complex eval_direct(const RealPolynomial& p, const Real& t) {
  if (t.certainly_negative()) return eval_direct(p, -t).conj();
  return p.evaluate(Complex::expi(t));
}

BoundaryPoint boundary_point(const RealPolynomial& p, const Real& t) {
  Complex v = eval_direct(p, t);
  Real m = v.norm();
  return {t, std::move(v), std::move(m)};
}

bool in_singular_guard_band(int n, const Real& t) {
  const Reduced r = reduce_to_half_period(t);
  return guard_band_hit(terms(n, r.t), t.precision());
}

Complex eval_theorem1(int n, const Real& t) {
  const Precision prec = t.precision();
  const Reduced r = reduce_to_half_period(t);
  const ClosedFormTerms ct = terms(n, r.t);
  if (guard_band_hit(ct, prec)) return eval_direct(pnew_coeffs(n, prec), t);

  const Real one(1, prec);
  const Real first = one / (ct.d * 2L);
  const Real k = (one - ct.c) / ((one - ct.cos_t) * ct.m) * ct.sin_t * sin(ct.half_arg) /
                 sqr(ct.d);
  Complex value = Complex(first, Real(prec)) + Complex::expi(ct.half_arg) * k;
  return maybe_conj(std::move(value), r.conjugate);
}

Real modulus_sq_theorem2(int n, const Real& t) {
  const Precision prec = t.precision();
  const Reduced r = reduce_to_half_period(t);
  const ClosedFormTerms ct = terms(n, r.t);
  if (guard_band_hit(ct, prec)) return eval_direct(pnew_coeffs(n, prec), t).norm();

  const Real one(1, prec);
  const Real sin_half = sin(ct.half_arg);
  const Real a = cos(ct.half_arg) / ct.d +
                 (one - ct.c) * 2L / ((one - ct.cos_t) * ct.m) * ct.sin_t / sqr(ct.d) * sin_half;
  const Real b = sin_half / ct.d;
  return (sqr(a) + sqr(b)) / 4L;
}

Real imag_part(int n, const Real& t) {
  const Precision prec = t.precision();
  const Reduced r = reduce_to_half_period(t);
  const ClosedFormTerms ct = terms(n, r.t);
  if (guard_band_hit(ct, prec)) return eval_direct(pnew_coeffs(n, prec), t).im();

  const Real one(1, prec);
  Real value = (one - ct.c) / ((one - ct.cos_t) * ct.m) * ct.sin_t * sqr(sin(ct.half_arg)) /
               sqr(ct.d);
  return r.conjugate ? -value : value;
}

}  // namespace koebe
