#include "gjms/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace gjms {

namespace {

struct BernoulliMemo {
  std::mutex mu;
  std::vector<BigRational> values{BigRational(1)};
};

BernoulliMemo& bernoulli_memo() {
  static BernoulliMemo memo;
  return memo;
}

}  // namespace

BigRational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  auto& memo = bernoulli_memo();
  std::lock_guard lock(memo.mu);
  auto& b = memo.values;
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
  for (int m = static_cast<int>(b.size()); m <= n; ++m) {
    if (m >= 3 && m % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    BigRational acc;
    for (int j = 0; j < m; ++j) {
      if (b[j].is_zero()) continue;
      acc += BigRational(binomial(m + 1, j)) * b[j];
    }
    b.push_back(-acc / BigRational(m + 1));
  }
  return b[n];
}

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigRational pow2(long e) { return pow(BigRational(2), e); }

}  // namespace gjms
