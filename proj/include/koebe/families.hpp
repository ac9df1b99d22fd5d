#pragma once

// Coefficient generators for the univalent polynomial families and the two
// nonnegative cosine kernels they are built from.

#include <string>
#include <string_view>

#include "koebe/arith.hpp"
#include "koebe/polynomial.hpp"

namespace koebe {

enum class Family { Fejer, Alexander, Suffridge, EgervarySzasz, PNew };

struct FamilySpec {
  Family family = Family::PNew;
  int degree = 1;
  /// Suffridge index, 1 <= j <= degree; ignored by the other families.
  int j = 1;

  /// Throws std::invalid_argument when degree < 1 or j is out of range.
  void validate() const;
  std::string label() const;
};

/// Accepts fejer, alexander, suffridge, egervary-szasz (or es), pnew.
Family parse_family(std::string_view name);
std::string_view family_name(Family family);

/// A_N(z) = sum_{k=1}^N z^k / k
RealPolynomial alexander_coeffs(int n, Precision prec = kDefaultPrecision);

/// F_N(z) = sum_{k=1}^N (1 - (k-1)/N) z^k
RealPolynomial fejer_coeffs(int n, Precision prec = kDefaultPrecision);

/// S_{N,j}(z) = sum_{k=1}^N (1 - (k-1)/N) sin(pi k j/(N+1)) / sin(pi j/(N+1)) z^k
RealPolynomial suffridge_coeffs(int n, int j, Precision prec = kDefaultPrecision);

/// Cosine coefficient b_k of the Egervary-Szasz polynomial of degree N:
/// b_0 = 1 and, for 1 <= k <= N,
///   b_k = ((N-k+3) sin((k+1)pi/(N+2)) - (N-k+1) sin((k-1)pi/(N+2)))
///         / ((N+2) sin(pi/(N+2))).
Real egervary_szasz_bk(int n, int k, Precision prec = kDefaultPrecision);

/// b_0 .. b_N as a polynomial (coefficient k multiplies cos kt).
RealPolynomial egervary_szasz_coeffs(int n, Precision prec = kDefaultPrecision);

/// P_N(z) = sum_{k=1}^N b_k sin(k pi/(N+2)) z^k, divided by its z^1
/// coefficient so that P_N'(0) = 1 exactly.
RealPolynomial pnew_coeffs(int n, Precision prec = kDefaultPrecision);

RealPolynomial generate(const FamilySpec& spec, Precision prec = kDefaultPrecision);

/// Fejer kernel (1/(N+1)) |sum_{k=0}^N e^{ikt}|^2; the enclosure is never
/// certainly negative.
Real fejer_kernel(int n, const Real& t);

/// Fejer kernel through its cosine expansion 1 + 2 sum (1 - k/(N+1)) cos kt.
Real fejer_kernel_cosine_sum(int n, const Real& t);

/// E_N(t) = (2/(N+2)) |sum_{k=0}^N sin((k+1)pi/(N+2)) e^{ikt}|^2
Real egervary_szasz_eval(int n, const Real& t);

/// E_N(t) = sum_{k=0}^N b_k cos kt
Real egervary_szasz_cosine_sum(int n, const Real& t);

}  // namespace koebe
