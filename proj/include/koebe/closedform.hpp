#pragma once

// P_N on the unit circle: direct power sums versus the closed-form
// representations of P_N(e^{it}), |P_N(e^{it})|^2 and Im P_N(e^{it}).
//
// The closed forms have removable singularities at cos t = cos(2pi/(N+2))
// and at t = 0. Inside a guard band of width 2^(-p/4) around either point,
// every closed-form routine falls back to direct summation of pnew_coeffs(N).

#include "koebe/arith.hpp"
#include "koebe/polynomial.hpp"

namespace koebe {

struct BoundaryPoint {
  Real t;
  Complex value;
  Real modulus_sq;
};

/// Horner evaluation of p(e^{it}). Negative t is evaluated as the conjugate
/// of p(e^{-it}), so eval_direct(p, -t) == conj(eval_direct(p, t)) exactly.
Complex eval_direct(const RealPolynomial& p, const Real& t);

BoundaryPoint boundary_point(const RealPolynomial& p, const Real& t);

/// P_N(e^{it}) = 1/(2(cos t - c)) + (1 - c)/((N+2)(1 - cos t))
///               * sin t sin((N+2)t/2) / (cos t - c)^2 * e^{i(N+2)t/2},
/// with c = cos(2pi/(N+2)). t outside (0, pi) is mapped by conjugate symmetry.
Complex eval_theorem1(int n, const Real& t);

/// |P_N(e^{it})|^2 as one quarter of
///   (cos(Mt/2)/d + (2/M)(1-c)/(1-cos t) sin t/d^2 sin(Mt/2))^2 + (sin(Mt/2)/d)^2
/// with M = N+2, d = cos t - c.
Real modulus_sq_theorem2(int n, const Real& t);

/// Im P_N(e^{it}) = (1-c)/((N+2)(1-cos t)) * sin t sin^2((N+2)t/2) / (cos t - c)^2
Real imag_part(int n, const Real& t);

/// True when t is inside the guard band of a removable singularity of the
/// closed forms for degree `n` (after reduction to [0, pi]).
bool in_singular_guard_band(int n, const Real& t);

}  // namespace koebe
