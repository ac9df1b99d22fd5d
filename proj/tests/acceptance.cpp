// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "koebe/boundary.hpp"
#include "koebe/closedform.hpp"
#include "koebe/families.hpp"
#include "koebe/pullback.hpp"
#include "koebe/radius.hpp"
#include "koebe/sturm.hpp"
#include "oracle/descartes.hpp"
#include "support.hpp"

using namespace koebe;

namespace {

constexpr Precision kPrec = 128;

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<bool(std::string&)> body;
};

Real q(long v) { return Real(v, kPrec); }

std::vector<Real> even(std::vector<Real> c) {
  std::vector<Real> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out.emplace_back(kPrec);
    out.push_back(std::move(c[i]));
  }
  return out;
}

bool tight_overlap(const Real& ours, const Real& exact, std::string& note, const char* what) {
  if (!ours.overlaps(exact)) {
    note += std::string(what) + " misses; ";
    return false;
  }
  if (test::width(ours) > 1e-30) {
    note += std::string(what) + " too wide; ";
    return false;
  }
  return true;
}

bool coefficient_goldens(std::string& note) {
  bool ok = true;
  const RealPolynomial p2 = pnew_coeffs(2, kPrec);
  const RealPolynomial p3 = pnew_coeffs(3, kPrec);
  const RealPolynomial p4 = pnew_coeffs(4, kPrec);
  const RealPolynomial p6 = pnew_coeffs(6, kPrec);
  const Real r5 = test::sqrt_of(5, kPrec), r2 = test::sqrt_of(2, kPrec);
  ok &= p2.degree() == 2 && p3.degree() == 3 && p4.degree() == 4 && p6.degree() == 6;
  for (const RealPolynomial* p : {&p2, &p3, &p4, &p6}) ok &= tight_overlap((*p)[1], q(1), note, "z^1");
  ok &= tight_overlap(p2[2], Real::ratio(1, 2, 256), note, "P_2 z^2");
  ok &= tight_overlap(p3[2], q(2) / r5, note, "P_3 z^2");
  ok &= tight_overlap(p4[2], Real::ratio(7, 6, 256), note, "P_4 z^2");
  ok &= tight_overlap(p4[3], Real::ratio(2, 3, 256), note, "P_4 z^3");
  ok &= tight_overlap(p4[4], Real::ratio(1, 6, 256), note, "P_4 z^4");
  ok &= tight_overlap(p6[6], q(1) / (r2 * 4L + q(8)), note, "P_6 z^6");
  return ok;
}

bool pullback_goldens(std::string& note) {
  constexpr double tol = 1e-20;
  const Real r2 = test::sqrt_of(2, kPrec);
  struct Case {
    int n;
    std::vector<Real> golden;
  };
  const std::vector<Case> cases{
      {1, {q(4)}},
      {2, even({q(9), q(1)})},
      {4, even({q(81), q(-9), q(7), q(1)})},  // (x^2+9)(x^4-2x^2+9)
      {6, even({r2 * 36L + q(54), (q(9) + r2 * 2L) * -10L, (r2 * 30L - q(61)) * -4L,
                (r2 * 70L - q(99)) * 4L, q(246) - r2 * 172L, q(6) - r2 * 4L})},
  };
  bool ok = true;
  for (const Case& c : cases) {
    if (!test::proportional(pullback_tn(c.n, kPrec).numerator, c.golden, tol)) {
      note += "T_" + std::to_string(c.n) + " differs; ";
      ok = false;
    }
  }
  return ok;
}

bool univalence_scan(std::string& note) {
  const auto certs = certify_range(2, 51, kDefaultPrecisionCap, Execution::Serial);
  bool ok = true;
  Precision highest = 0;
  for (const UnivalenceCertificate& c : certs) {
    highest = std::max(highest, c.precision_used);
    if (c.verdict != Verdict::CertifiedMonotoneDecreasing || c.root_count_pos_axis != 0 ||
        c.interior_sign != Sign::Negative) {
      note += "N=" + std::to_string(c.n) + " not certified; ";
      ok = false;
    }
  }
  note += "max precision used " + std::to_string(highest) + " bits";
  return ok;
}

bool radius_values(std::string& note) {
  RadiusTableOptions opts;
  const auto rows = radius_table(1, 51, opts);
  bool ok = true;
  const Real r3 = (q(3) - test::sqrt_of(5, kPrec)) / 2L;
  ok &= rows[2].upper_pn.overlaps(r3) && std::abs(rows[2].upper_pn.mid_double() - 0.381966) <= 1e-6;
  ok &= rows[3].upper_pn.contains(Real::ratio(1, 3, 512));
  ok &= std::abs(rows[4].upper_pn.mid_double() - 0.3080) <= 5e-5;
  ok &= std::abs(rows[5].upper_pn.mid_double() - 0.2929) <= 5e-5;
  if (!ok) note += "N=3..6 values off; ";
  for (const RadiusReport& r : rows) {
    const Real at_minus1 = abs(pnew_coeffs(r.n, kPrec).evaluate(q(-1)));
    if (!r.upper_pn.overlaps(at_minus1)) {
      note += "N=" + std::to_string(r.n) + " closed form misses |P_N(-1)|; ";
      ok = false;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "r3=%.9f r5=%.9f r6=%.9f", rows[2].upper_pn.mid_double(),
                rows[4].upper_pn.mid_double(), rows[5].upper_pn.mid_double());
  note += buf;
  return ok;
}

bool suffridge_comparison(std::string& note) {
  const Real ours = upper_bound_pn(3, kPrec);
  const MinDistanceResult s3 = min_distance(suffridge_coeffs(3, 1, kPrec));
  const Real at_minus1 = suffridge_value(3, kPrec);
  const bool ordered = ours.certainly_less(s3.distance);
  const bool min_ok = std::abs(s3.distance.mid_double() - 0.3849) <= 5e-5;
  const bool value_ok = std::abs(at_minus1.mid_double() - 0.3905) <= 5e-5;
  const bool disjoint = !ours.overlaps(s3.distance) && !s3.distance.overlaps(at_minus1);
  char buf[128];
  std::snprintf(buf, sizeof buf, "|P_3(-1)|=%.7f min|S_3|=%.7f |S_3(-1)|=%.7f", ours.mid_double(),
                s3.distance.mid_double(), at_minus1.mid_double());
  note += buf;
  return ordered && min_ok && value_ok && disjoint && s3.converged;
}

bool identity_suites(std::string& note) {
  test::Gen gen(20240601);
  int mismatches = 0, negative_imag = 0, samples = 0;
  for (int n = 1; n <= 51; ++n) {
    const RealPolynomial p = pnew_coeffs(n, kPrec);
    for (int i = 0; i < 64; ++i) {
      const Real t = Real::from_double(gen.uniform(0.0, M_PI), kPrec);
      const Complex direct = eval_direct(p, t);
      if (!eval_theorem1(n, t).overlaps(direct)) ++mismatches;
      if (!modulus_sq_theorem2(n, t).overlaps(direct.norm())) ++mismatches;
      const Real im = imag_part(n, t);
      if (!im.overlaps(direct.im())) ++mismatches;
      if (im.lower_double() < 0) ++negative_imag;
      ++samples;
    }
  }
  note += std::to_string(samples) + " samples, " + std::to_string(mismatches) +
          " mismatches, " + std::to_string(negative_imag) + " negative imaginary parts";
  return mismatches == 0 && negative_imag == 0;
}

bool sturm_oracle(std::string& note) {
  test::Gen gen(77);
  int disagreements = 0, undecided = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const long degree = gen.integer(1, 8);
    std::vector<long> c;
    for (long k = 0; k <= degree; ++k) c.push_back(gen.integer(-9, 9));
    if (c.back() == 0) c.back() = gen.integer(0, 1) ? 1 : -1;
    oracle::Poly rp(c.begin(), c.end());
    const auto got = sturm_count(RealPolynomial::from_integers(c, kPrec),
                                 SturmInterval::positive_axis(), kDefaultPrecisionCap);
    if (!got) {
      ++undecided;
    } else if (*got != oracle::count_positive_roots(rp)) {
      ++disagreements;
    }
  }
  note += std::to_string(disagreements) + " disagreements, " + std::to_string(undecided) +
          " undecided of 1000";
  return disagreements == 0 && undecided == 0;
}

bool psi_values(std::string& note) {
  bool ok = true;
  for (int n = 1; n <= 50; ++n) {
    const Real psi = psi_n(n, kPrec);
    const Real lo = Real::pi(kPrec) / static_cast<long>(n + 3);
    const Real hi = Real::pi(kPrec) / static_cast<long>(n + 2);
    if (n % 2 == 1) {
      ok &= mpfr_equal_p(psi.mid(), lo.mid()) && mpfr_equal_p(psi.rad(), lo.rad());
    } else {
      ok &= psi_equation(n, lo).certainly_positive() && psi_equation(n, hi).certainly_negative();
      ok &= lo.certainly_less(psi) && psi.certainly_less(hi);
    }
    if (upper_bound_pn(n, kPrec).certainly_less(lower_bound_rs(n, kPrec))) {
      note += "lower > upper at N=" + std::to_string(n) + "; ";
      ok = false;
    }
  }
  return ok;
}

bool asymptotics(std::string& note) {
  const Real u = upper_bound_pn(1000, kPrec);
  char buf[64];
  std::snprintf(buf, sizeof buf, "upper_bound_pn(1000)=%.9f", u.mid_double());
  note += buf;
  return u.lower_double() > 0.25 && u.upper_double() < 0.2505;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "coefficient goldens P_2, P_3, P_4, P_6", 1.0, coefficient_goldens},
      {2, "T_N goldens up to scale (N = 1, 2, 4, 6)", 5.0, pullback_goldens},
      {3, "univalence certified for N in [2, 51], single thread", 600.0, univalence_scan},
      {4, "Koebe radius upper bounds", 0.0, radius_values},
      {5, "N = 3 comparison with the Suffridge polynomial", 10.0, suffridge_comparison},
      {6, "closed-form identity suites, N <= 51, 64 t each", 0.0, identity_suites},
      {7, "Sturm count vs exact Descartes oracle, 1000 polynomials", 0.0, sturm_oracle},
      {8, "psi_N brackets and lower_rs <= upper_pn, N <= 50", 0.0, psi_values},
      {9, "upper_bound_pn(1000) in (0.25, 0.2505)", 0.0, asymptotics},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note += std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
      ok = false;
      note += " (over time limit)";
    }
    if (!ok) ++failed;
    std::printf("[%s] %d %s  %.3fs  %s\n", ok ? "PASS" : "FAIL", c.id, c.title, elapsed,
                note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
