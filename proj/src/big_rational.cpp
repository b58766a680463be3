#include "gjms/big_rational.hpp"

#include <stdexcept>

namespace gjms {

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("BigRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational::BigRational(long numerator, long denominator)
    : BigRational(BigInt(numerator), BigInt(denominator)) {}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  BigInt num;
  BigInt den = 1;
  try {
    if (slash == std::string::npos) {
      num = BigInt(s, 10);
    } else {
      num = BigInt(s.substr(0, slash), 10);
      den = BigInt(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
  }
  return BigRational(num, den);
}

BigRational BigRational::abs() const {
  BigRational r;
  r.value_ = ::abs(value_);
  return r;
}

BigRational BigRational::reciprocal() const { return BigRational(1) / *this; }

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigRational pow(const BigRational& q, long e) {
  if (e < 0) return pow(q.reciprocal(), -e);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), q.numerator().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.denominator().get_mpz_t(), static_cast<unsigned long>(e));
  return BigRational(num, den);
}

}  // namespace gjms
