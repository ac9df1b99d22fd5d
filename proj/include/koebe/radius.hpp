#pragma once

// Two-sided bounds on the Koebe radius r_N of degree-N univalent polynomials.

#include <vector>

#include "koebe/arith.hpp"
#include "koebe/execution.hpp"

namespace koebe {

/// (1/4) sec^2(pi/(N+2)) = |P_N(-1)|.
Real upper_bound_pn(int n, Precision prec = kDefaultPrecision);

/// |S_N(-1)| = (1/4) ((N+1)/N) sec^2(pi/(2(N+1))).
Real suffridge_value(int n, Precision prec = kDefaultPrecision);

/// pi/(N+3) for odd N. For even N, the root of
///   f(psi) = (N+4) sin((N+2) psi) + (N+2) sin((N+4) psi)
/// in (pi/(N+3), pi/(N+2)), bisected until the enclosure is at most
/// 2^(-prec/2) wide. Throws std::runtime_error if f does not change sign
/// certifiably across that bracket.
Real psi_n(int n, Precision prec = kDefaultPrecision);

/// f(psi) above, for bracket checks.
Real psi_equation(int n, const Real& psi);

/// (1/4) sec^2(psi_N).
Real lower_bound_rs(int n, Precision prec = kDefaultPrecision);

struct RadiusReport {
  int n = 0;
  Real upper_pn;
  Real suffridge_at_minus1;
  /// Numeric minimum of |S_N| on the unit circle.
  Real suffridge_boundary_min;
  Real psi_n;
  Real lower_rs;
  /// Numeric minimum of |P_N| on the unit circle.
  Real boundary_min;
  bool certified = false;
};

struct RadiusTableOptions {
  Precision precision = kDefaultPrecision;
  Precision precision_cap = kDefaultPrecisionCap;
  int grid = 4096;
  Execution exec = Execution::Parallel;
};

RadiusReport radius_row(int n, const RadiusTableOptions& options = {});

/// One report per N in [first, last], ordered by N.
std::vector<RadiusReport> radius_table(int first, int last, const RadiusTableOptions& options = {});

inline std::vector<RadiusReport> radius_table(int n_max, const RadiusTableOptions& options = {}) {
  return radius_table(1, n_max, options);
}

}  // namespace koebe
