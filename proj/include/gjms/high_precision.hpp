#pragma once

#include <string>

#include <mpfr.h>

#include "gjms/big_rational.hpp"

namespace gjms {

/// Working precision for high-precision evaluation, in decimal digits.
struct PrecisionContext {
  int decimal_digits = 50;

  /// Throws InvalidInput when decimal_digits < 15.
  void validate() const;
  /// Bits needed for decimal_digits plus `guard_digits`.
  mpfr_prec_t bits(int guard_digits = 0) const;
};

/// Owning RAII wrapper over an mpfr_t. Every value carries its own precision;
/// binary operations round to the larger of the operand precisions.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(double value, mpfr_prec_t bits);
  BigFloat(const BigRational& value, mpfr_prec_t bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(mpfr_prec_t bits);
  static BigFloat log2(mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }
  BigFloat abs() const;
  BigFloat pow(long e) const;
  BigFloat sqrt() const;

  /// Scientific/fixed rendering with `significant` digits ("%.*Rg").
  std::string to_string(int significant) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  void widen_to(mpfr_prec_t bits);

  mpfr_t value_;
};

}  // namespace gjms
