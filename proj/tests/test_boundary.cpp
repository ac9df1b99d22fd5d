#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "koebe/boundary.hpp"
#include "koebe/families.hpp"
#include "support.hpp"

using namespace koebe;

TEST_CASE("unit circle") {
  const BoundaryCurve c = sample_curve(pnew_coeffs(1), 64, FamilySpec{Family::PNew, 1, 1});
  REQUIRE(c.samples.size() == 64);
  REQUIRE(c.polynomial_id);
  for (const CurveSample& s : c.samples) {
    CHECK(s.abs == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::cos(s.t) == doctest::Approx(s.re).epsilon(1e-12));
  }
}

TEST_CASE("sampling layout and symmetry") {
  const BoundaryCurve c = sample_curve(suffridge_coeffs(4, 1), 10, std::nullopt);
  CHECK_FALSE(c.polynomial_id);
  for (int i = 0; i < 10; ++i) {
    CHECK(c.samples[i].t == doctest::Approx(2 * M_PI * i / 10));
  }
  for (int i = 1; i < 5; ++i) {
    CHECK(c.samples[i].re == c.samples[10 - i].re);
    CHECK(c.samples[i].im == -c.samples[10 - i].im);
  }
  CHECK_THROWS_AS(sample_curve(pnew_coeffs(2), 7, std::nullopt), std::invalid_argument);
}

TEST_CASE("P_4 curve passes through -1/3") {
  const BoundaryCurve c = sample_curve(pnew_coeffs(4), 8, std::nullopt);
  CHECK(c.samples[4].abs == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  double smallest = 1e9;
  for (const CurveSample& s : c.samples) smallest = std::min(smallest, s.abs);
  CHECK(smallest == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("minimum distance") {
  const MinDistanceResult s3 = min_distance(suffridge_coeffs(3, 1));
  CHECK(s3.converged);
  CHECK_FALSE(s3.attained_at_minus1);
  CHECK(std::abs(s3.distance.mid_double() - 0.3849) < 5e-5);
  CHECK(s3.t_star.mid_double() == doctest::Approx(2.80176).epsilon(1e-5));

  const MinDistanceResult p4 = min_distance(pnew_coeffs(4));
  CHECK(p4.converged);
  CHECK(p4.attained_at_minus1);
  CHECK(p4.distance.contains(Real::ratio(1, 3, 256)));

  const MinDistanceResult p1 = min_distance(pnew_coeffs(1));
  CHECK(p1.distance.contains(1.0));
  CHECK_THROWS_AS(min_distance(pnew_coeffs(2), 10), std::invalid_argument);
}

TEST_CASE("minimum sits at -1 for P_N") {
  for (int n = 2; n <= 12; ++n) {
    const MinDistanceResult m = min_distance(pnew_coeffs(n), 1024);
    const Real expected = abs(pnew_coeffs(n).evaluate(Real(-1, 128)));
    CHECK(m.attained_at_minus1);
    CHECK(std::abs(m.distance.mid_double() - expected.mid_double()) < 1e-12);
  }
}

TEST_CASE("typically real") {
  for (int n = 1; n <= 20; ++n) {
    CHECK(typically_real_check(pnew_coeffs(n), 256, Execution::Serial).ok);
    CHECK(typically_real_check(fejer_coeffs(n), 256, Execution::Serial).ok);
  }
  // z - 2 z^2: Im = sin t (1 - 4 cos t) < 0 near t = 0
  const RealPolynomial bad = RealPolynomial::from_integers(std::vector<long>{0, 1, -2}, 128);
  const TypicallyRealResult r = typically_real_check(bad, 256, Execution::Serial);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness_t);
  CHECK(*r.witness_t < std::acos(0.25));
}
