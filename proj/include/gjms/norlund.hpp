#pragma once

// Nörlund numbers D^{(m)}_{2n} = 2^{2n} B^{(m)}_{2n}(m/2), the coefficients of
//
//   (t cosec t)^m = sum_{n>=0} (-1)^n D^{(m)}_{2n} t^{2n} / (2n)!
//
// They feed the Laurent expansion of sech^m(z/2) about (2s+1)πi, and through
// it every residue in the closed-form determinant.

#include <vector>

#include "gjms/big_rational.hpp"

namespace gjms {

/// D^{(m)}_{2n} by composition with the m = 1 (Bernoulli) series:
///
///   D^{(m)}_{2n} = (1/n) sum_{j=1}^{n} C(2n,2j) ((m+1)j - n) (2 - 4^j) B_{2j} D^{(m)}_{2n-2j}
///
/// Rows are memoized per m and extended lazily. Requires m >= 1, n >= 0.
BigRational d_norlund(int m, int n);

/// Independent route: expands sin(t)/t from factorials, inverts the series,
/// raises it to the m-th power and reads off D^{(m)}_{2k} for k <= n_max.
std::vector<BigRational> d_norlund_series_oracle(int m, int n_max);

}  // namespace gjms
