#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gjms {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& value) : value_(value) {}
  BigRational(const BigInt& numerator, const BigInt& denominator);
  BigRational(long numerator, long denominator);

  /// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  BigRational abs() const;
  BigRational reciprocal() const;
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

/// q^e for integer e; negative e requires q != 0.
BigRational pow(const BigRational& q, long e);

}  // namespace gjms
