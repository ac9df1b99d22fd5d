#include <doctest.h>

#include <cmath>

#include "koebe/boundary.hpp"
#include "koebe/closedform.hpp"
#include "koebe/families.hpp"
#include "koebe/pullback.hpp"
#include "koebe/radius.hpp"
#include "support.hpp"

using namespace koebe;

TEST_CASE("certified P_N attain their boundary minimum at -1") {
  for (int n = 1; n <= 16; ++n) {
    const UnivalenceCertificate cert = certify_univalence(n);
    REQUIRE(cert.certified());
    const RealPolynomial p = pnew_coeffs(n);
    const MinDistanceResult m = min_distance(p, 2048);
    if (n > 1) CHECK(m.attained_at_minus1);  // |P_1| is constant on the circle
    CHECK(std::abs(m.distance.mid_double() - upper_bound_pn(n).mid_double()) < 1e-12);
    CHECK(typically_real_check(p, 512, Execution::Serial).ok);
  }
}

TEST_CASE("the N = 3 Suffridge polynomial has a larger inscribed disk than P_3") {
  const Real ours = upper_bound_pn(3);
  const MinDistanceResult s3 = min_distance(suffridge_coeffs(3, 1));
  CHECK(ours.certainly_less(s3.distance));
  CHECK(s3.distance.certainly_less(suffridge_value(3)));
}

TEST_CASE("pullback monotonicity matches the sampled boundary") {
  // A certified R_N decreases on (0, inf), so |P_N(e^{it})| decreases on (0, pi).
  for (int n : {3, 7, 12}) {
    REQUIRE(certify_univalence(n).certified());
    const BoundaryCurve c = sample_curve(pnew_coeffs(n), 400, std::nullopt);
    for (std::size_t i = 1; i <= 200; ++i) CHECK(c.samples[i].abs <= c.samples[i - 1].abs + 1e-15);
  }
}

TEST_CASE("higher precision tightens but does not move the answers") {
  for (int n : {5, 9}) {
    const Real lo = upper_bound_pn(n, 128), hi = upper_bound_pn(n, 512);
    CHECK(lo.contains(hi));
    CHECK(lower_bound_rs(n, 128).overlaps(lower_bound_rs(n, 512)));
    const RealPolynomial a = pnew_coeffs(n, 128), b = pnew_coeffs(n, 512);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].overlaps(b[k]));
    const UnivalenceCertificate c = certify_univalence(n, 8192, 512);
    CHECK(c.certified());
    CHECK(c.precision_used == 512);
  }
}
