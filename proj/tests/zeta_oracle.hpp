#pragma once

// Test-only ζ(s): plain summation to N plus the Euler–Maclaurin tail.
// Shares nothing with the accelerated alternating series in the library.

#include "gjms/combinatorics.hpp"
#include "gjms/high_precision.hpp"

namespace oracle {

inline gjms::BigFloat zeta_euler_maclaurin(int s, int digits) {
  using gjms::BigFloat;
  using gjms::BigRational;
  const mpfr_prec_t bits = gjms::PrecisionContext{digits + 10}.bits();
  constexpr int kN = 40;
  BigFloat sum(bits);
  for (int n = 1; n < kN; ++n) sum += BigFloat(static_cast<double>(n), bits).pow(-s);
  const BigFloat big_n(static_cast<double>(kN), bits);
  // ∫_N^∞ x^{-s} dx + f(N)/2
  sum += big_n.pow(1 - s) / BigFloat(static_cast<double>(s - 1), bits);
  sum += big_n.pow(-s) / BigFloat(2.0, bits);
  // - Σ_j B_{2j}/(2j)! f^{(2j-1)}(N), f^{(r)}(N) = (-1)^r s(s+1)...(s+r-1) N^{-s-r}
  const BigFloat threshold = BigFloat(10.0, bits).pow(-(digits + 6));
  BigRational rising(s);  // s(s+1)...(s+2j-2), starts at j = 1
  for (int j = 1; j <= 60; ++j) {
    if (j > 1) rising *= BigRational(s + 2 * j - 3) * BigRational(s + 2 * j - 2);
    const BigRational c = gjms::bernoulli(2 * j) / BigRational(gjms::factorial(2 * j)) * rising;
    BigFloat term = BigFloat(c, bits) * big_n.pow(-s - 2 * j + 1);
    // f^{(2j-1)} carries a minus sign, which cancels the leading minus
    sum += term;
    if (term.abs() < threshold) break;
  }
  return sum;
}

}  // namespace oracle
