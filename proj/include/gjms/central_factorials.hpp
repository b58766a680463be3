#pragma once

// Central factorial coefficients of the first kind,
//
//   x^{[n]} = x ∏_{i=1}^{n-1} (x + n/2 - i) = Σ_k t(n,k) x^k,
//
// and their link to the Nörlund numbers:
//
//   t(2m+1, 2n+1) = 2^{2(n-m)} C(2m,2n) D^{(2m+1)}_{2m-2n}.

#include <vector>

#include "gjms/big_rational.hpp"
#include "gjms/zeta_expr.hpp"

namespace gjms {

/// t(n,k) by exact expansion of x^{[n]}. Zero for k < 1, k > n, or n-k odd.
BigRational central_t(int n, int k);

/// Central differential of nothing D^k 0^{[n]} = k! t(n,k).
BigRational central_difference_of_nothing(int n, int k);

/// Which upper index of D enters the right-hand side of the identity above.
enum class NorlundIndex {
  Corrected,  // D^{(2m+1)}_{2m-2n}
  Printed,    // D^{(m)}_{2m-2n}, fails already at (m, n) = (1, 0)
};

struct CentralIdentityCheck {
  int m = 0;
  int n = 0;
  BigRational lhs;  // t(2m+1, 2n+1)
  BigRational rhs;  // 2^{2(n-m)} C(2m,2n) D^{(.)}_{2m-2n}
  bool pass = false;
};

/// Exact check of the identity for every 0 <= n <= m <= m_max. Failures are
/// reported, not thrown.
std::vector<CentralIdentityCheck> verify_central_identity(int m_max,
                                                          NorlundIndex index = NorlundIndex::Corrected);

/// f_{2m+1} from central differentials of nothing:
///
///   Σ_{n=0}^{m} (-1)^{m+n} 2^{2(m-n)} D^{2n+1}0^{[2m+1]} / ((2m)! (2n+1) π^{2n+1}) · (1 - 2^{-2n}) ζ(2n+1)
///
/// where the n = 0 member stands for its limit log 2. Written with a separate
/// log 2 term, the literal form (-1)^m D0^{[2m+1]} log 2 is short by the
/// factor returned from central_log2_normalization.
ZetaExpr f_odd_central(int m);

/// Factor c(m) with f_odd_central(m)'s log 2 coefficient equal to
/// c(m) · (-1)^m D0^{[2m+1]}, as coefficient of log(2)·π^{-1}:
/// 2^{2m} / (2m)!. Gives 1/π at m = 0 and 2/π at m = 1.
BigRational central_log2_normalization(int m);

}  // namespace gjms
