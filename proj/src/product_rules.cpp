#include "gjms/product_rules.hpp"

#include <sstream>
#include <stdexcept>

#include "gjms/closed_form.hpp"
#include "gjms/combinatorics.hpp"
#include "gjms/errors.hpp"

namespace gjms {

std::vector<BigInt> chebyshev_u_coeffs(int n) {
  if (n < 0) throw InvalidInput("chebyshev_u_coeffs: n must be >= 0");
  // U_n(x) = Σ_j (-1)^j C(n-j, j) (2x)^{n-2j}
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; 2 * j <= n; ++j) {
    BigInt term = binomial(n - j, j);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 2 * j));
    c[n - 2 * j] = j % 2 == 0 ? term : BigInt(-term);
  }
  return c;
}

std::vector<BigInt> chebyshev_u_odd_part(int k) {
  if (k < 1) throw InvalidInput("chebyshev_u_odd_part: k must be >= 1");
  const auto c = chebyshev_u_coeffs(2 * k - 1);
  std::vector<BigInt> u(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) u[j] = c[2 * j + 1];
  return u;
}

std::vector<BigInt> exponents_from_chebyshev(int k) {
  const auto u = chebyshev_u_odd_part(k);
  std::vector<BigInt> v(u.size());
  for (int j = 0; j < k; ++j) {
    BigInt q;
    mpz_tdiv_q_2exp(q.get_mpz_t(), u[j].get_mpz_t(), static_cast<mp_bitcnt_t>(2 * j + 1));
    if (q * (BigInt(1) << (2 * j + 1)) != u[j]) throw std::logic_error("Chebyshev exponent is not an integer");
    v[j] = (k - 1 + j) % 2 == 0 ? q : BigInt(-q);
  }
  return v;
}

std::vector<BigInt> exponents_from_binomials(int k) {
  if (k < 1) throw InvalidInput("exponents_from_binomials: k must be >= 1");
  std::vector<BigInt> v(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) v[j] = binomial(k + j, k - 1 - j);
  return v;
}

ProductRule product_rule(int k) {
  const auto from_u = exponents_from_chebyshev(k);
  const auto from_binom = exponents_from_binomials(k);
  if (from_u != from_binom) throw std::logic_error("product rule exponent constructions disagree");
  ProductRule rule;
  rule.k = k;
  for (int j = 0; j < k; ++j) rule.factors.push_back({2 * j, std::nullopt, from_u[j]});
  return rule;
}

ProductRule product_rule(int d, int k) {
  require_odd_sphere_operator(d, k);
  if (d - 2 * k + 2 < 3) throw InvalidInput("product rule would contain P_2(1)");
  ProductRule rule = product_rule(k);
  rule.d = d;
  for (auto& f : rule.factors) f.dimension = d - f.offset;
  return rule;
}

namespace {

std::string dimension_label(const RuleFactor& f) {
  if (f.dimension) return std::to_string(*f.dimension);
  if (f.offset == 0) return "d";
  return "d-" + std::to_string(f.offset);
}

}  // namespace

std::string ProductRule::to_plain() const {
  std::ostringstream os;
  os << "P_" << 2 * k << "(" << (d ? std::to_string(*d) : std::string("d")) << ") ~";
  for (const auto& f : factors) {
    os << " P_2";
    if (f.exponent != 1) os << "^" << f.exponent.get_str();
    os << "(" << dimension_label(f) << ")";
  }
  return os.str();
}

std::string ProductRule::to_latex() const {
  std::ostringstream os;
  os << "P_{" << 2 * k << "}(" << (d ? std::to_string(*d) : std::string("d")) << ")\\sim ";
  for (const auto& f : factors) {
    os << "P_2";
    if (f.exponent != 1) os << "^{" << f.exponent.get_str() << "}";
    os << "(" << dimension_label(f) << ")";
  }
  return os.str();
}

ZetaExpr logdet_via_product(int d, int k) {
  const ProductRule rule = product_rule(d, k);
  ZetaExpr out;
  for (const auto& f : rule.factors) out += logdet_gjms(*f.dimension, 1) * BigRational(f.exponent);
  return out;
}

}  // namespace gjms
