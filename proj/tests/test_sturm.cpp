#include <doctest.h>

#include <vector>

#include "koebe/sturm.hpp"
#include "oracle/descartes.hpp"
#include "support.hpp"

using namespace koebe;

namespace {

RealPolynomial ints(const std::vector<long>& c, Precision prec = 128) {
  return RealPolynomial::from_integers(c, prec);
}

oracle::Poly rational(const std::vector<long>& c) {
  oracle::Poly p;
  for (long v : c) p.emplace_back(v);
  return p;
}

std::vector<long> multiply(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

TEST_CASE("textbook examples") {
  const auto axis = SturmInterval::positive_axis();
  CHECK(sturm_count(ints({1, 0, 1}), axis) == 0);
  CHECK(sturm_count(ints({2, -3, 1}), axis) == 2);              // (x-1)(x-2)
  CHECK(sturm_count(ints({-3, 7, -5, 1}), axis) == 2);          // (x-1)^2 (x-3)
  CHECK(sturm_count(ints({0, -1, 0, 1}), axis) == 1);           // x(x-1)(x+1), 0 excluded
  CHECK(sturm_count(ints({5}), axis) == 0);
  CHECK(sturm_count(ints({-2, 0, 1}), SturmInterval::bounded(Real(1, 128), Real(2, 128))) == 1);
  CHECK(sturm_count(ints({-2, 0, 1}), SturmInterval::bounded(Real(-2, 128), Real(2, 128))) == 2);
  CHECK(sturm_count(ints({1, -2, 1}), SturmInterval::bounded(Real(0, 128), Real(3, 128))) == 1);
}

TEST_CASE("sequence structure") {
  const auto chain = sturm_sequence(ints({-6, 11, -6, 1}));
  REQUIRE(chain);
  CHECK(chain->size() == 4);
  CHECK(chain->back().degree() == 0);
  CHECK(variations_at_zero_plus(*chain) == 3);
  CHECK(variations_at_infinity(*chain) == 0);
  CHECK(variations_at(*chain, Real::ratio(5, 2, 128)) == 1);
}

TEST_CASE("undecided when a coefficient straddles zero") {
  const Real fuzz = hull(Real::from_double(-1e-9, 64), Real::from_double(1e-9, 64));
  const RealPolynomial p(std::vector<Real>{fuzz, Real(-2, 64), Real(1, 64)});
  CHECK_FALSE(sturm_count(p, SturmInterval::positive_axis()).has_value());
  CHECK_FALSE(sturm_count(p, SturmInterval::positive_axis(), 4096).has_value());
}

TEST_CASE("exact inputs escalate precision") {
  // (x - 1)(x - 1 - 2^-100): exact at 128 bits, roots 2^-100 apart
  const Real a(1, 128), b = Real(1, 128) + Real(1, 128).ldexp(-100);
  const RealPolynomial p(std::vector<Real>{a * b, -(a + b), Real(1, 128)});
  REQUIRE(p[0].is_exact());
  REQUIRE(p[1].is_exact());
  CHECK(sturm_count(p, SturmInterval::positive_axis(), 8192) == 2);
  const auto inside = SturmInterval::bounded(Real::ratio(1, 2, 128), Real(2, 128));
  CHECK(sturm_count(p, inside, 8192) == 2);
}

TEST_CASE("property: agreement with the Descartes oracle") {
  test::Gen gen(2024);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long> c;
    if (trial % 2 == 0) {
      const long d = gen.integer(1, 8);
      for (long k = 0; k <= d; ++k) c.push_back(gen.integer(-6, 6));
      if (c.back() == 0) c.back() = 1;
    } else {
      // products of small factors, with repeats
      c = {1};
      const long factors = gen.integer(1, 4);
      for (long f = 0; f < factors && static_cast<long>(c.size()) < 8; ++f) {
        std::vector<long> lin{gen.integer(-4, 4), gen.integer(1, 3)};
        c = multiply(c, lin);
        if (gen.integer(0, 2) == 0 && c.size() < 8) c = multiply(c, lin);
      }
    }
    const oracle::Poly rp = rational(c);
    CHECK(sturm_count(ints(c), SturmInterval::positive_axis(), 4096) ==
          oracle::count_positive_roots(rp));

    const long lo3 = gen.integer(-15, 5), hi3 = lo3 + gen.integer(1, 15);
    const oracle::Rational lo(lo3, 3), hi(hi3, 3);
    if (oracle::eval(rp, lo) == 0 || oracle::eval(rp, hi) == 0) continue;
    const auto bounded =
        SturmInterval::bounded(Real::ratio(lo3, 3, 128), Real::ratio(hi3, 3, 128));
    CHECK(sturm_count(ints(c), bounded, 4096) == oracle::count_roots(rp, lo, hi));
    ++checked;
  }
  CHECK(checked > 200);
}
