#pragma once

// Determinant product rules: det P_{2k}(d) equals a product of Yamabe
// determinants det P_2(d - 2j) raised to positive integer powers v_j(k),
// e.g. P_4(d) ~ P_2²(d) P_2(d-2). Equality holds for the determinants only,
// not for the operators.

#include <optional>
#include <string>
#include <vector>

#include "gjms/big_rational.hpp"
#include "gjms/zeta_expr.hpp"

namespace gjms {

/// Monomial coefficients of the Chebyshev polynomial U_n; entry p multiplies x^p.
std::vector<BigInt> chebyshev_u_coeffs(int n);

/// u_j(k) in U_{2k-1}(x) = x (u_0 + u_1 x² + ... + u_{k-1} x^{2k-2}).
std::vector<BigInt> chebyshev_u_odd_part(int k);

/// v_j(k) = (-1)^{k-1+j} u_j(k) / 2^{2j+1}, the power of det P_2(d - 2j).
std::vector<BigInt> exponents_from_chebyshev(int k);

/// The same powers from the binomial closed form v_j(k) = C(k+j, k-1-j).
std::vector<BigInt> exponents_from_binomials(int k);

struct RuleFactor {
  int offset = 0;                // the factor lives in dimension d - offset
  std::optional<int> dimension;  // set for rules built against a concrete d
  BigInt exponent;
};

struct ProductRule {
  int k = 1;
  std::optional<int> d;
  std::vector<RuleFactor> factors;  // ordered d, d-2, ..., d-2k+2

  /// e.g. "P_4(d) ~ P_2^2(d) P_2(d-2)" or "P_4(5) ~ P_2^2(5) P_2(3)".
  std::string to_plain() const;
  std::string to_latex() const;
};

/// Rule for abstract d. Builds the exponents both ways and throws
/// std::logic_error if they disagree.
ProductRule product_rule(int k);

/// Rule for concrete odd d. Throws InvalidInput / DivergentDeterminant for an
/// invalid (d, k), and InvalidInput if a factor would sit in dimension 1.
ProductRule product_rule(int d, int k);

/// Σ_i exponent_i · logdet_gjms(dimension_i, 1).
ZetaExpr logdet_via_product(int d, int k);

}  // namespace gjms
