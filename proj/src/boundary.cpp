#include "koebe/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "koebe/closedform.hpp"

namespace koebe {

namespace {

// i * pi / denom as a ball.
Real grid_angle(long i, long denom, Precision prec) { return Real::pi(prec) * i / denom; }

CurveSample to_sample(const Real& t, const Complex& v) {
  return {t.mid_double(), v.re().mid_double(), v.im().mid_double(), v.abs().mid_double()};
}

Real modulus_sq_at(const RealPolynomial& p, double t, Precision prec) {
  return eval_direct(p, Real::from_double(t, prec)).norm();
}

// |p(e^{it})|^2 in double precision, for the grid scan only.
double modulus_sq_double(const std::vector<double>& c, double t) {
  const std::complex<double> z = std::polar(1.0, t);
  std::complex<double> acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return std::norm(acc);
}

}  // namespace

BoundaryCurve sample_curve(const RealPolynomial& p, int count, std::optional<FamilySpec> id,
                           Execution exec) {
  if (count < 8) throw std::invalid_argument("sample_curve: count must be >= 8");
  const Precision prec = p.precision();
  const int half = count / 2;
  BoundaryCurve curve;
  curve.polynomial_id = id;
  curve.samples.resize(static_cast<std::size_t>(count));

  auto evaluate = [&](int i) {
    const Real t = grid_angle(2L * i, count, prec);
    curve.samples[static_cast<std::size_t>(i)] = to_sample(t, eval_direct(p, t));
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i <= half; ++i) evaluate(i);
  } else {
    for (int i = 0; i <= half; ++i) evaluate(i);
  }

  for (int i = half + 1; i < count; ++i) {
    const CurveSample& mirror = curve.samples[static_cast<std::size_t>(count - i)];
    curve.samples[static_cast<std::size_t>(i)] = {grid_angle(2L * i, count, prec).mid_double(),
                                                  mirror.re, -mirror.im, mirror.abs};
  }
  return curve;
}

MinDistanceResult min_distance(const RealPolynomial& p, int grid, double relative_tolerance,
                               Execution exec) {
  if (grid < 64) throw std::invalid_argument("min_distance: grid must be >= 64");
  const Precision prec = p.precision();
  const double step = std::numbers::pi / grid;

  std::vector<double> coeffs;
  for (const Real& c : p.coefficients()) coeffs.push_back(c.mid_double());
  std::vector<double> values(static_cast<std::size_t>(grid) + 1);
  auto evaluate = [&](int i) {
    values[static_cast<std::size_t>(i)] = modulus_sq_double(coeffs, i * step);
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i <= grid; ++i) evaluate(i);
  } else {
    for (int i = 0; i <= grid; ++i) evaluate(i);
  }

  // |p|^2 is symmetric about 0 and pi, so the bracket may straddle either end.
  const auto best =
      static_cast<double>(std::min_element(values.begin(), values.end()) - values.begin());
  double a = (best - 1) * step;
  double b = (best + 1) * step;

  // Golden-section search on [a, b].
  constexpr double kInvPhi = 0.6180339887498949;
  constexpr int kMaxIterations = 500;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  Real f1 = modulus_sq_at(p, x1, prec);
  Real f2 = modulus_sq_at(p, x2, prec);
  bool converged = false;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    const double scale = std::max(1.0, std::abs(0.5 * (a + b)));
    if (b - a <= relative_tolerance * scale) {
      converged = true;
      break;
    }
    if (mpfr_cmp(f1.mid(), f2.mid()) < 0) {
      b = x2;
      x2 = x1;
      f2 = std::move(f1);
      x1 = b - kInvPhi * (b - a);
      f1 = modulus_sq_at(p, x1, prec);
    } else {
      a = x1;
      x1 = x2;
      f1 = std::move(f2);
      x2 = a + kInvPhi * (b - a);
      f2 = modulus_sq_at(p, x2, prec);
    }
  }

  const Real lo = Real::from_double(a, prec);
  const Real hi = Real::from_double(b, prec);
  Real t_star = hull(lo, hi);
  Real distance = sqrt(eval_direct(p, t_star).norm());
  const bool at_minus1 = t_star.overlaps(Real::pi(prec));
  return {std::move(t_star), std::move(distance), at_minus1, converged};
}

TypicallyRealResult typically_real_check(const RealPolynomial& p, int grid, Execution exec) {
  if (grid < 2) throw std::invalid_argument("typically_real_check: grid must be >= 2");
  const Precision prec = p.precision();
  std::vector<char> negative(static_cast<std::size_t>(grid), 0);
  auto check = [&](int i) {
    negative[static_cast<std::size_t>(i)] =
        eval_direct(p, grid_angle(i, grid, prec)).im().certainly_negative() ? 1 : 0;
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 1; i < grid; ++i) check(i);
  } else {
    for (int i = 1; i < grid; ++i) check(i);
  }
  for (int i = 1; i < grid; ++i) {
    if (negative[static_cast<std::size_t>(i)] != 0) {
      return {false, grid_angle(i, grid, prec).mid_double()};
    }
  }
  return {};
}

}  // namespace koebe
