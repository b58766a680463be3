#include "gjms/norlund.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "gjms/combinatorics.hpp"

namespace gjms {

namespace {

struct DTable {
  std::mutex mu;
  std::map<int, std::vector<BigRational>> rows;
};

DTable& d_table() {
  static DTable table;
  return table;
}

// Truncated product of two even power series stored by coefficient of t^{2k}.
std::vector<BigRational> multiply_truncated(const std::vector<BigRational>& a,
                                            const std::vector<BigRational>& b) {
  const std::size_t n = a.size();
  std::vector<BigRational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

BigRational d_norlund(int m, int n) {
  if (m < 1) throw std::invalid_argument("d_norlund: m must be >= 1");
  if (n < 0) throw std::invalid_argument("d_norlund: n must be >= 0");

  // Bernoulli values are fetched before taking our lock so the two memo
  // tables never nest.
  std::vector<BigRational> b2(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) b2[j] = bernoulli(2 * j);

  auto& table = d_table();
  std::lock_guard lock(table.mu);
  auto& row = table.rows[m];
  if (row.empty()) row.emplace_back(1);
  for (int k = static_cast<int>(row.size()); k <= n; ++k) {
    BigRational acc;
    for (int j = 1; j <= k; ++j) {
      const BigRational w = BigRational(binomial(2L * k, 2L * j)) *
                            (BigRational(2) - pow(BigRational(4), j)) * b2[j];
      acc += w * BigRational((m + 1) * j - k) * row[k - j];
    }
    row.push_back(acc / BigRational(k));
  }
  return row[n];
}

std::vector<BigRational> d_norlund_series_oracle(int m, int n_max) {
  if (m < 1) throw std::invalid_argument("d_norlund_series_oracle: m must be >= 1");
  if (n_max < 0) throw std::invalid_argument("d_norlund_series_oracle: n_max must be >= 0");
  const std::size_t len = static_cast<std::size_t>(n_max) + 1;

  // sin(t)/t = sum (-1)^k t^{2k} / (2k+1)!
  std::vector<BigRational> sinc(len);
  for (std::size_t k = 0; k < len; ++k) {
    sinc[k] = BigRational(k % 2 == 0 ? 1 : -1) / BigRational(factorial(2 * static_cast<long>(k) + 1));
  }
  // t/sin(t) by series division: sum_{j<=k} sinc[j] inv[k-j] = [k == 0]
  std::vector<BigRational> inv(len);
  inv[0] = BigRational(1) / sinc[0];
  for (std::size_t k = 1; k < len; ++k) {
    BigRational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += sinc[j] * inv[k - j];
    inv[k] = -acc / sinc[0];
  }
  std::vector<BigRational> power(len);
  power[0] = BigRational(1);
  for (int i = 0; i < m; ++i) power = multiply_truncated(power, inv);

  std::vector<BigRational> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    const BigRational sign(k % 2 == 0 ? 1 : -1);
    out[k] = sign * BigRational(factorial(2 * static_cast<long>(k))) * power[k];
  }
  return out;
}

}  // namespace gjms
