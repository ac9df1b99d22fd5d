#include "koebe/arith.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>

namespace koebe {

namespace {

constexpr Precision kRadiusBits = 30;
// Extra bits used when comparing endpoints so the comparison itself does not
// round away a real gap.
constexpr Precision kCompareGuard = 64;

// RAII scratch value.
class Scratch {
 public:
  explicit Scratch(Precision prec) { mpfr_init2(v_, prec); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }
  mpfr_ptr operator->() { return v_; }

 private:
  mpfr_t v_;
};

// out = ulp(x) rounded up (zero for x == 0).
void ulp_of(mpfr_ptr out, mpfr_srcptr x) {
  if (mpfr_zero_p(x) || !mpfr_number_p(x)) {
    mpfr_set_zero(out, 1);
    return;
  }
  mpfr_set_ui_2exp(out, 1, mpfr_get_exp(x) - static_cast<mpfr_exp_t>(mpfr_get_prec(x)),
                   MPFR_RNDU);
}

// Lower and upper endpoints at `prec` bits, rounded in the given directions.
void endpoints(const Real& x, mpfr_ptr lo, mpfr_rnd_t lo_rnd, mpfr_ptr hi, mpfr_rnd_t hi_rnd) {
  mpfr_sub(lo, x.mid(), x.rad(), lo_rnd);
  mpfr_add(hi, x.mid(), x.rad(), hi_rnd);
}

}  // namespace

Real::Real(Precision prec) {
  mpfr_init2(mid_, prec);
  mpfr_init2(rad_, kRadiusBits);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Real::Real(long value, Precision prec) : Real(prec) {
  add_rounding_error(mpfr_set_si(mid_, value, MPFR_RNDN));
}

Real::Real(const Real& other) {
  mpfr_init2(mid_, other.precision());
  mpfr_init2(rad_, kRadiusBits);
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(mid_, MPFR_PREC_MIN);
  mpfr_init2(rad_, kRadiusBits);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(mid_, other.precision());
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
  return *this;
}

Real::~Real() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void Real::add_rounding_error(int ternary) {
  if (ternary == 0) return;
  Scratch u(kRadiusBits);
  ulp_of(u, mid_);
  mpfr_add(rad_, rad_, u, MPFR_RNDU);
}

Real Real::ratio(long num, long den, Precision prec) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  return Real(num, prec) / den;
}

Real Real::from_double(double value, Precision prec) {
  Real r(prec);
  r.add_rounding_error(mpfr_set_d(r.mid_, value, MPFR_RNDN));
  return r;
}

Real Real::from_decimal(const std::string& text, Precision prec) {
  Real r(prec);
  if (mpfr_set_str(r.mid_, text.c_str(), 10, MPFR_RNDN) != 0) {
    // mpfr_set_str returns -1 on a malformed string; the rounding is not
    // reported, so always charge one ulp.
    throw std::invalid_argument("not a decimal number: " + text);
  }
  r.add_rounding_error(1);
  return r;
}

Real Real::from_bounds(const mpfr_t lo, const mpfr_t hi, Precision prec) {
  Real r(prec);
  Scratch sum(std::max({prec, mpfr_get_prec(lo), mpfr_get_prec(hi)}) + 2);
  mpfr_add(sum, lo, hi, MPFR_RNDN);
  mpfr_div_2ui(sum, sum, 1, MPFR_RNDN);
  mpfr_set(r.mid_, sum, MPFR_RNDN);
  Scratch up(kRadiusBits), down(kRadiusBits);
  mpfr_sub(up, hi, r.mid_, MPFR_RNDU);
  mpfr_sub(down, r.mid_, lo, MPFR_RNDU);
  mpfr_max(r.rad_, up, down, MPFR_RNDU);
  if (mpfr_sgn(r.rad_) < 0) mpfr_set_zero(r.rad_, 1);
  return r;
}

Real Real::pi(Precision prec) {
  static std::shared_mutex mutex;
  static std::map<Precision, Real> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(prec); it != cache.end()) return it->second;
  }
  Real value(prec);
  value.add_rounding_error(mpfr_const_pi(value.mid_, MPFR_RNDN));
  std::unique_lock lock(mutex);
  return cache.emplace(prec, std::move(value)).first->second;
}

Real Real::with_precision(Precision prec) const {
  Real r(prec);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  r.add_rounding_error(mpfr_set(r.mid_, mid_, MPFR_RNDN));
  return r;
}

Real Real::midpoint() const {
  Real r(precision());
  mpfr_set(r.mid_, mid_, MPFR_RNDN);
  return r;
}

double Real::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

double Real::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

double Real::lower_double() const {
  Scratch lo(precision()), hi(precision());
  endpoints(*this, lo, MPFR_RNDD, hi, MPFR_RNDU);
  return mpfr_get_d(lo, MPFR_RNDD);
}

double Real::upper_double() const {
  Scratch lo(precision()), hi(precision());
  endpoints(*this, lo, MPFR_RNDD, hi, MPFR_RNDU);
  return mpfr_get_d(hi, MPFR_RNDU);
}

bool Real::certainly_positive() const {
  return mpfr_sgn(mid_) > 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool Real::certainly_negative() const {
  return mpfr_sgn(mid_) < 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool Real::contains(double value) const {
  return contains(from_double(value, std::max<Precision>(precision(), 53)));
}

bool Real::contains(const Real& inner) const {
  const Precision prec = std::max(precision(), inner.precision()) + kCompareGuard;
  Scratch olo(prec), ohi(prec), ilo(prec), ihi(prec);
  endpoints(*this, olo, MPFR_RNDU, ohi, MPFR_RNDD);
  endpoints(inner, ilo, MPFR_RNDD, ihi, MPFR_RNDU);
  return mpfr_lessequal_p(olo, ilo) && mpfr_lessequal_p(ihi, ohi);
}

bool Real::overlaps(const Real& other) const {
  const Precision prec = std::max(precision(), other.precision()) + kCompareGuard;
  Scratch alo(prec), ahi(prec), blo(prec), bhi(prec);
  endpoints(*this, alo, MPFR_RNDD, ahi, MPFR_RNDU);
  endpoints(other, blo, MPFR_RNDD, bhi, MPFR_RNDU);
  return mpfr_lessequal_p(alo, bhi) && mpfr_lessequal_p(blo, ahi);
}

bool Real::certainly_less(const Real& other) const {
  const Precision prec = std::max(precision(), other.precision()) + kCompareGuard;
  Scratch alo(prec), ahi(prec), blo(prec), bhi(prec);
  endpoints(*this, alo, MPFR_RNDD, ahi, MPFR_RNDU);
  endpoints(other, blo, MPFR_RNDD, bhi, MPFR_RNDU);
  return mpfr_less_p(ahi, blo);
}

std::string Real::decimal(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, mid_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Real::radius_decimal() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.2RUe", rad_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& rhs) {
  const Precision prec = std::max(precision(), rhs.precision());
  if (prec > precision()) mpfr_prec_round(mid_, prec, MPFR_RNDN);
  mpfr_add(rad_, rad_, rhs.rad_, MPFR_RNDU);
  add_rounding_error(mpfr_add(mid_, mid_, rhs.mid_, MPFR_RNDN));
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  const Precision prec = std::max(precision(), rhs.precision());
  if (prec > precision()) mpfr_prec_round(mid_, prec, MPFR_RNDN);
  mpfr_add(rad_, rad_, rhs.rad_, MPFR_RNDU);
  add_rounding_error(mpfr_sub(mid_, mid_, rhs.mid_, MPFR_RNDN));
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  const Precision prec = std::max(precision(), rhs.precision());
  // |m1| r2 + |m2| r1 + r1 r2
  Scratch a1(kRadiusBits), a2(kRadiusBits), acc(kRadiusBits), t(kRadiusBits);
  mpfr_abs(a1, mid_, MPFR_RNDU);
  mpfr_abs(a2, rhs.mid_, MPFR_RNDU);
  mpfr_mul(acc, a1, rhs.rad_, MPFR_RNDU);
  mpfr_mul(t, a2, rad_, MPFR_RNDU);
  mpfr_add(acc, acc, t, MPFR_RNDU);
  mpfr_mul(t, rad_, rhs.rad_, MPFR_RNDU);
  mpfr_add(acc, acc, t, MPFR_RNDU);

  if (prec > precision()) mpfr_prec_round(mid_, prec, MPFR_RNDN);
  mpfr_set(rad_, acc, MPFR_RNDU);
  add_rounding_error(mpfr_mul(mid_, mid_, rhs.mid_, MPFR_RNDN));
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (!rhs.certainly_positive() && !rhs.certainly_negative()) {
    throw std::domain_error("division by a ball containing zero");
  }
  const Precision prec = std::max(precision(), rhs.precision());
  // |a/b - m1/m2| <= (r1 + |m1/m2| r2) / (|m2| - r2)
  Scratch denom(kRadiusBits), r1(kRadiusBits);
  mpfr_abs(denom, rhs.mid_, MPFR_RNDD);
  mpfr_sub(denom, denom, rhs.rad_, MPFR_RNDD);
  if (mpfr_sgn(denom) <= 0) throw std::domain_error("division by a ball containing zero");
  mpfr_set(r1, rad_, MPFR_RNDU);

  if (prec > precision()) mpfr_prec_round(mid_, prec, MPFR_RNDN);
  const int ternary = mpfr_div(mid_, mid_, rhs.mid_, MPFR_RNDN);

  Scratch q(kRadiusBits), u(kRadiusBits);
  mpfr_abs(q, mid_, MPFR_RNDU);
  if (ternary != 0) {
    ulp_of(u, mid_);
    mpfr_add(q, q, u, MPFR_RNDU);
  }
  mpfr_mul(q, q, rhs.rad_, MPFR_RNDU);
  mpfr_add(q, q, r1, MPFR_RNDU);
  mpfr_div(rad_, q, denom, MPFR_RNDU);
  add_rounding_error(ternary);
  return *this;
}

Real operator*(Real lhs, long rhs) {
  Scratch r(kRadiusBits);
  mpfr_mul_ui(r, lhs.rad_, static_cast<unsigned long>(rhs < 0 ? -rhs : rhs), MPFR_RNDU);
  mpfr_set(lhs.rad_, r, MPFR_RNDU);
  lhs.add_rounding_error(mpfr_mul_si(lhs.mid_, lhs.mid_, rhs, MPFR_RNDN));
  return lhs;
}

Real operator/(Real lhs, long rhs) {
  if (rhs == 0) throw std::domain_error("division by zero");
  mpfr_div_ui(lhs.rad_, lhs.rad_, static_cast<unsigned long>(rhs < 0 ? -rhs : rhs),
              MPFR_RNDU);
  lhs.add_rounding_error(mpfr_div_si(lhs.mid_, lhs.mid_, rhs, MPFR_RNDN));
  return lhs;
}

Real Real::ldexp(long exp) const {
  Real r(*this);
  mpfr_mul_2si(r.mid_, r.mid_, exp, MPFR_RNDN);
  mpfr_mul_2si(r.rad_, r.rad_, exp, MPFR_RNDU);
  return r;
}

long Real::exponent() const {
  return mpfr_zero_p(mid_) ? 0 : static_cast<long>(mpfr_get_exp(mid_));
}

Real abs(const Real& x) { return mpfr_sgn(x.mid_) < 0 ? -x : x; }

Real sqr(const Real& x) {
  if (!x.contains_zero() || x.is_exact()) return x * x;
  // [0, (|m| + r)^2]
  Real r(x.precision());
  Scratch hi(x.precision());
  mpfr_abs(hi, x.mid_, MPFR_RNDU);
  mpfr_add(hi, hi, x.rad_, MPFR_RNDU);
  mpfr_sqr(hi, hi, MPFR_RNDU);
  mpfr_div_2ui(r.mid_, hi, 1, MPFR_RNDU);
  mpfr_set(r.rad_, r.mid_, MPFR_RNDU);
  return r;
}

Real sqrt(const Real& x) {
  if (x.is_exact_zero()) return x;
  if (x.certainly_negative()) throw std::domain_error("sqrt of a negative ball");
  Real r(x.precision());
  if (x.contains_zero()) {
    // [0, sqrt(m + r)]
    Scratch hi(x.precision());
    mpfr_add(hi, x.mid_, x.rad_, MPFR_RNDU);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
    mpfr_div_2ui(r.mid_, hi, 1, MPFR_RNDU);
    mpfr_set(r.rad_, r.mid_, MPFR_RNDU);
    return r;
  }
  // |sqrt(a) - sqrt(m)| <= r / sqrt(m)
  Scratch root(kRadiusBits);
  mpfr_sqrt(root, x.mid_, MPFR_RNDD);
  mpfr_div(r.rad_, x.rad_, root, MPFR_RNDU);
  r.add_rounding_error(mpfr_sqrt(r.mid_, x.mid_, MPFR_RNDN));
  return r;
}

Real sin(const Real& x) {
  Real r(x);
  r.add_rounding_error(mpfr_sin(r.mid_, x.mid_, MPFR_RNDN));
  if (mpfr_cmp_ui(r.rad_, 2) > 0) mpfr_set_ui(r.rad_, 2, MPFR_RNDU);
  return r;
}

Real cos(const Real& x) {
  Real r(x);
  r.add_rounding_error(mpfr_cos(r.mid_, x.mid_, MPFR_RNDN));
  if (mpfr_cmp_ui(r.rad_, 2) > 0) mpfr_set_ui(r.rad_, 2, MPFR_RNDU);
  return r;
}

Real atan(const Real& x) {
  Real r(x);
  r.add_rounding_error(mpfr_atan(r.mid_, x.mid_, MPFR_RNDN));
  return r;
}

Real hull(const Real& a, const Real& b) {
  const Precision prec = std::max(a.precision(), b.precision());
  Scratch alo(prec + kCompareGuard), ahi(prec + kCompareGuard);
  Scratch blo(prec + kCompareGuard), bhi(prec + kCompareGuard);
  endpoints(a, alo, MPFR_RNDD, ahi, MPFR_RNDU);
  endpoints(b, blo, MPFR_RNDD, bhi, MPFR_RNDU);
  mpfr_min(alo, alo, blo, MPFR_RNDD);
  mpfr_max(ahi, ahi, bhi, MPFR_RNDU);
  return Real::from_bounds(alo, ahi, prec);
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.decimal() << " +/- " << x.radius_decimal();
}

Complex Complex::expi(const Real& t) { return {cos(t), sin(t)}; }

Real Complex::abs() const { return sqrt(norm()); }

Complex& Complex::operator+=(const Complex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real re = re_ * rhs.re_ - im_ * rhs.im_;
  Real im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

namespace {

// sin(n*pi/d) with the argument reduced to [0, pi/2] before any rounding.
Real sin_pi_ratio(long long n, long long d, Precision prec) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  n %= 2 * d;
  if (n < 0) n += 2 * d;
  bool negate = false;
  if (n >= d) {
    n -= d;
    negate = true;
  }
  if (2 * n > d) n = d - n;
  Real value(prec);
  if (n == 0) {
    // exact zero
  } else if (2 * n == d) {
    value = Real(1, prec);
  } else if (6 * n == d) {
    value = Real::ratio(1, 2, prec);
  } else {
    value = sin(Real::pi(prec) * static_cast<long>(n) / static_cast<long>(d));
  }
  return negate ? -value : value;
}

}  // namespace

Real trig_constant(TrigKind kind, long numerator, long denominator, Precision prec) {
  if (denominator < 1) throw std::invalid_argument("trig_constant: denominator must be >= 1");
  const auto n = static_cast<long long>(numerator);
  const auto d = static_cast<long long>(denominator);
  if (kind == TrigKind::Sin) return sin_pi_ratio(n, d, prec);
  // cos(n pi / d) = sin((d - 2n) pi / (2d))
  return sin_pi_ratio(d - 2 * n, 2 * d, prec);
}

const char* to_string(Sign sign) {
  switch (sign) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
    case Sign::Undecided: return "undecided";
  }
  return "undecided";
}

Sign sign_of(const Real& x) {
  if (x.is_exact_zero()) return Sign::Zero;
  if (x.certainly_positive()) return Sign::Positive;
  if (x.certainly_negative()) return Sign::Negative;
  return Sign::Undecided;
}

Sign certified_sign(const Real& x, Precision max_precision,
                    const std::function<Real(Precision)>& refine) {
  Real current = x;
  for (;;) {
    const Sign s = sign_of(current);
    if (s != Sign::Undecided) return s;
    const Precision next = current.precision() * 2;
    if (next > max_precision) return Sign::Undecided;
    current = refine(next);
  }
}

}  // namespace koebe
