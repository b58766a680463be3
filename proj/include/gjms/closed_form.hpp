#pragma once

// Exact evaluation of log det P_{2k} on the unit odd-dimensional sphere over
// the basis {1, log 2, ζ(odd)} with explicit π powers, plus high-precision
// numeric evaluation of the resulting expressions.
//
// The building blocks are the residue sums
//
//   f_m = ∫_0^∞ dx / ((x² + π²) cosh^m(x/2)),
//
// which close in terms of Nörlund numbers and the alternating zeta function.

#include "gjms/big_rational.hpp"
#include "gjms/high_precision.hpp"
#include "gjms/zeta_expr.hpp"

namespace gjms {

/// η(ℓ) = Σ_{n>=1} (-1)^n / n^ℓ, i.e. the negative of the usual Dirichlet eta:
/// η(1) = -log 2 and η(ℓ) = (2^{1-ℓ} - 1) ζ(ℓ) for ℓ > 1. Requires odd ℓ >= 1
/// (even ℓ has no atom in the basis).
ZetaExpr eta_expr(int ell);

/// f_{2m} = (1/2) (-1)^m D^{(2m)}_{2m} / (2m)!, with f_0 = 1/2.
BigRational f_even(int m);

/// f_{2m+1} = -Σ_{n=0}^{m} (-1)^n D^{(2m+1)}_{2n} η(2m-2n+1) / ((2n)! π^{2m-2n+1}).
ZetaExpr f_odd(int m);

/// log det P_{2k}(d) for odd d >= 3 and 1 <= k, 2k <= d:
///
///   (-1)^{(d-1)/2+k} π / 2^{d-2k} Σ_{j=0}^{k-1} C(2k-1-j, j) (-1/4)^j (f_{d+2j-2k} - f_{d+2+2j-2k})
///
/// Throws InvalidInput for even d or k < 1 and DivergentDeterminant for 2k > d.
ZetaExpr logdet_gjms(int d, int k);

/// ζ(s) for odd s >= 3 to a relative error below 10^{-ctx.decimal_digits}.
/// Uses the Cohen–Rodriguez Villegas–Zagier acceleration of the alternating
/// series for (1 - 2^{1-s}) ζ(s).
BigFloat zeta_odd(int s, const PrecisionContext& ctx = {});

/// Number of accelerated terms zeta_odd needs for the requested digits.
int zeta_odd_terms(const PrecisionContext& ctx);

/// Numeric value of an expression. Absolute error is below
/// 10^{-(digits-2)} times the sum of the term magnitudes.
BigFloat evaluate(const ZetaExpr& expr, const PrecisionContext& ctx = {});

}  // namespace gjms
