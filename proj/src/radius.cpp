#include "koebe/radius.hpp"

#include <stdexcept>

#include "koebe/boundary.hpp"
#include "koebe/families.hpp"
#include "koebe/pullback.hpp"

namespace koebe {

namespace {

void require_degree(int n) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1, got " + std::to_string(n));
}

// 1 / (4 cos^2 x)
Real quarter_sec_sq(const Real& cos_x) { return Real(1, cos_x.precision()) / (sqr(cos_x) * 4L); }

}  // namespace

Real upper_bound_pn(int n, Precision prec) {
  require_degree(n);
  return quarter_sec_sq(trig_constant(TrigKind::Cos, 1, n + 2, prec));
}

Real suffridge_value(int n, Precision prec) {
  require_degree(n);
  return quarter_sec_sq(trig_constant(TrigKind::Cos, 1, 2L * (n + 1), prec)) *
         Real::ratio(n + 1, n, prec);
}

Real psi_equation(int n, const Real& psi) {
  return sin(psi * static_cast<long>(n + 2)) * static_cast<long>(n + 4) +
         sin(psi * static_cast<long>(n + 4)) * static_cast<long>(n + 2);
}

Real psi_n(int n, Precision prec) {
  require_degree(n);
  const Real pi = Real::pi(prec);
  if (n % 2 == 1) return pi / static_cast<long>(n + 3);

  Real lo = pi / static_cast<long>(n + 3);
  Real hi = pi / static_cast<long>(n + 2);
  if (!psi_equation(n, lo).certainly_positive() || !psi_equation(n, hi).certainly_negative()) {
    throw std::runtime_error("psi_n: no certified sign change on (pi/(N+3), pi/(N+2)) for N=" +
                             std::to_string(n));
  }
  const long target_exp = -static_cast<long>(prec / 2) - 1;  // radius < 2^(-p/2-1)
  for (int iter = 0; iter < 4 * prec && !hull(lo, hi).radius_below(target_exp); ++iter) {
    const Real mid = ((lo.midpoint() + hi.midpoint()) / 2L).midpoint();
    const Sign s = sign_of(psi_equation(n, mid));
    if (s == Sign::Positive) {
      lo = mid;
    } else if (s == Sign::Negative) {
      hi = mid;
    } else {
      // f(mid) straddles zero: the root is within rounding distance of mid.
      return hull(hull(lo, hi), mid);
    }
  }
  return hull(lo, hi);
}

Real lower_bound_rs(int n, Precision prec) { return quarter_sec_sq(cos(psi_n(n, prec))); }

RadiusReport radius_row(int n, const RadiusTableOptions& options) {
  const Precision prec = options.precision;
  RadiusReport row;
  row.n = n;
  row.upper_pn = upper_bound_pn(n, prec);
  row.suffridge_at_minus1 = suffridge_value(n, prec);
  row.suffridge_boundary_min =
      min_distance(suffridge_coeffs(n, 1, prec), options.grid, kDefaultRefineTolerance,
                   Execution::Serial)
          .distance;
  row.psi_n = psi_n(n, prec);
  row.lower_rs = lower_bound_rs(n, prec);
  row.boundary_min =
      min_distance(pnew_coeffs(n, prec), options.grid, kDefaultRefineTolerance, Execution::Serial)
          .distance;
  row.certified = certify_univalence(n, options.precision_cap, prec).certified();
  return row;
}

std::vector<RadiusReport> radius_table(int first, int last, const RadiusTableOptions& options) {
  if (first < 1 || last < first) throw std::invalid_argument("radius_table: empty range");
  const int count = last - first + 1;
  std::vector<RadiusReport> rows(static_cast<std::size_t>(count));
  if (options.exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = radius_row(first + i, options);
  } else {
    for (int i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = radius_row(first + i, options);
  }
  return rows;
}

}  // namespace koebe
