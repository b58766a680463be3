#include "gjms/central_factorials.hpp"

#include <map>
#include <mutex>

#include "gjms/combinatorics.hpp"
#include "gjms/errors.hpp"
#include "gjms/norlund.hpp"

namespace gjms {

namespace {

struct CentralCoeffTable {
  std::mutex mu;
  std::map<int, std::vector<BigRational>> rows;  // rows[n][k] = t(n,k)
};

CentralCoeffTable& central_table() {
  static CentralCoeffTable table;
  return table;
}

std::vector<BigRational> expand_central_factorial(int n) {
  // start from the polynomial x, multiply by (x + n/2 - i)
  std::vector<BigRational> poly{BigRational(0), BigRational(1)};
  for (int i = 1; i <= n - 1; ++i) {
    const BigRational shift = BigRational(n, 2) - BigRational(i);
    std::vector<BigRational> next(poly.size() + 1);
    for (std::size_t p = 0; p < poly.size(); ++p) {
      next[p + 1] += poly[p];
      next[p] += poly[p] * shift;
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

BigRational central_t(int n, int k) {
  if (n < 1) throw InvalidInput("central_t: n must be >= 1");
  if (k < 1 || k > n) return BigRational(0);
  auto& table = central_table();
  std::lock_guard lock(table.mu);
  auto& row = table.rows[n];
  if (row.empty()) row = expand_central_factorial(n);
  return row[k];
}

BigRational central_difference_of_nothing(int n, int k) {
  return BigRational(factorial(k)) * central_t(n, k);
}

std::vector<CentralIdentityCheck> verify_central_identity(int m_max, NorlundIndex index) {
  if (m_max < 1) throw InvalidInput("verify_central_identity: m_max must be >= 1");
  std::vector<CentralIdentityCheck> out;
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= m; ++n) {
      CentralIdentityCheck c;
      c.m = m;
      c.n = n;
      c.lhs = central_t(2 * m + 1, 2 * n + 1);
      const int upper = index == NorlundIndex::Corrected ? 2 * m + 1 : m;
      // the printed variant has no D^{(0)}; report it as a failure
      if (upper >= 1) {
        c.rhs = pow2(2L * (n - m)) * BigRational(binomial(2L * m, 2L * n)) * d_norlund(upper, m - n);
        c.pass = c.lhs == c.rhs;
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

ZetaExpr f_odd_central(int m) {
  if (m < 0) throw InvalidInput("f_odd_central: m must be >= 0");
  const BigRational two_m_fact(factorial(2L * m));
  ZetaExpr out;
  for (int n = 0; n <= m; ++n) {
    const BigRational sign((m + n) % 2 == 0 ? 1 : -1);
    const BigRational weight = sign * pow2(2L * (m - n)) * central_difference_of_nothing(2 * m + 1, 2 * n + 1) /
                               (two_m_fact * BigRational(2 * n + 1));
    if (n == 0) {
      out += ZetaExpr::term(Atom::log2(), -1, weight);
    } else {
      out += ZetaExpr::term(Atom::zeta(2 * n + 1), -(2 * n + 1), weight * (BigRational(1) - pow2(-2L * n)));
    }
  }
  return out;
}

BigRational central_log2_normalization(int m) {
  if (m < 0) throw InvalidInput("central_log2_normalization: m must be >= 0");
  return pow2(2L * m) / BigRational(factorial(2L * m));
}

}  // namespace gjms
