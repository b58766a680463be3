#include "gjms/closed_form.hpp"

#include <cmath>

#include "gjms/combinatorics.hpp"
#include "gjms/errors.hpp"
#include "gjms/norlund.hpp"

namespace gjms {

void require_odd_sphere_operator(int d, int k) {
  if (d % 2 == 0) throw InvalidInput("d must be odd");
  if (d < 3) throw InvalidInput("d must be at least 3");
  if (k < 1) throw InvalidInput("k must be at least 1");
  if (2 * k > d) throw DivergentDeterminant("determinant diverges for 2k > d");
}

ZetaExpr eta_expr(int ell) {
  if (ell < 1 || ell % 2 == 0) throw InvalidInput("eta_expr: argument must be odd and >= 1");
  if (ell == 1) return ZetaExpr::term(Atom::log2(), 0, BigRational(-1));
  return ZetaExpr::term(Atom::zeta(ell), 0, pow2(1 - ell) - BigRational(1));
}

BigRational f_even(int m) {
  if (m < 0) throw InvalidInput("f_even: m must be >= 0");
  if (m == 0) return BigRational(1, 2);
  const BigRational sign(m % 2 == 0 ? 1 : -1);
  return BigRational(1, 2) * sign * d_norlund(2 * m, m) / BigRational(factorial(2L * m));
}

ZetaExpr f_odd(int m) {
  if (m < 0) throw InvalidInput("f_odd: m must be >= 0");
  ZetaExpr out;
  for (int n = 0; n <= m; ++n) {
    const int ell = 2 * m - 2 * n + 1;
    const BigRational sign(n % 2 == 0 ? 1 : -1);
    const BigRational c = -sign * d_norlund(2 * m + 1, n) / BigRational(factorial(2L * n));
    out += (eta_expr(ell) * c).times_pi(-ell);
  }
  return out;
}

namespace {

// f_m for odd index m.
ZetaExpr f_odd_index(int index) { return f_odd((index - 1) / 2); }

}  // namespace

ZetaExpr logdet_gjms(int d, int k) {
  require_odd_sphere_operator(d, k);
  ZetaExpr sum;
  for (int j = 0; j < k; ++j) {
    const BigRational weight = BigRational(binomial(2L * k - 1 - j, j)) * pow(BigRational(-1, 4), j);
    sum += (f_odd_index(d + 2 * j - 2 * k) - f_odd_index(d + 2 + 2 * j - 2 * k)) * weight;
  }
  const BigRational sign(((d - 1) / 2 + k) % 2 == 0 ? 1 : -1);
  return (sum * (sign * pow2(2L * k - d))).times_pi(1);
}

int zeta_odd_terms(const PrecisionContext& ctx) {
  // relative error of the acceleration is at most 2 / (3 + √8)^n
  const double target = (ctx.decimal_digits + 2) * std::log(10.0) + std::log(2.0);
  return static_cast<int>(std::ceil(target / std::log(3.0 + std::sqrt(8.0)))) + 1;
}

BigFloat zeta_odd(int s, const PrecisionContext& ctx) {
  if (s < 3 || s % 2 == 0) throw InvalidInput("zeta_odd: s must be odd and >= 3");
  ctx.validate();
  const int n = zeta_odd_terms(ctx);
  // the weights grow like (3+√8)^n, so carry twice the requested digits
  const mpfr_prec_t bits = PrecisionContext{2 * ctx.decimal_digits + 10}.bits();

  BigFloat d = (BigFloat(3.0, bits) + BigFloat(8.0, bits).sqrt()).pow(n);
  d = (d + BigFloat(1.0, bits) / d) / BigFloat(2.0, bits);
  BigFloat b(-1.0, bits);
  BigFloat c = -d;
  BigFloat sum(bits);
  for (int k = 0; k < n; ++k) {
    c = b - c;
    // a_k = 1 / (k+1)^s
    BigFloat a = BigFloat(static_cast<double>(k + 1), bits).pow(-s);
    sum += c * a;
    const BigRational ratio(static_cast<long>(k + n) * static_cast<long>(k - n),
                            static_cast<long>(2 * k + 1) * static_cast<long>(k + 1));
    b *= BigFloat(ratio * BigRational(2), bits);
  }
  BigFloat eta = sum / d;
  // eta = Σ (-1)^k/(k+1)^s = (1 - 2^{1-s}) ζ(s)
  const BigFloat scale(BigRational(1) - pow2(1 - s), bits);
  BigFloat result = eta / scale;
  mpfr_prec_round(result.get(), ctx.bits(2), MPFR_RNDN);
  return result;
}

BigFloat evaluate(const ZetaExpr& expr, const PrecisionContext& ctx) {
  ctx.validate();
  const mpfr_prec_t bits = ctx.bits(10);
  const PrecisionContext inner{ctx.decimal_digits + 10};
  const BigFloat pi = BigFloat::pi(bits);
  BigFloat total(bits);
  for (const auto& t : expr.terms()) {
    BigFloat value(BigRational(t.coeff), bits);
    switch (t.atom.kind) {
      case Atom::Kind::One: break;
      case Atom::Kind::Log2: value *= BigFloat::log2(bits); break;
      case Atom::Kind::Zeta: value *= zeta_odd(t.atom.zeta_arg, inner); break;
    }
    if (t.pi_pow != 0) value *= pi.pow(t.pi_pow);
    total += value;
  }
  return total;
}

}  // namespace gjms
