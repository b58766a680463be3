#include "gjms/high_precision.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gjms/errors.hpp"

namespace gjms {

void PrecisionContext::validate() const {
  if (decimal_digits < 15) throw InvalidInput("precision must be at least 15 decimal digits");
}

mpfr_prec_t PrecisionContext::bits(int guard_digits) const {
  return static_cast<mpfr_prec_t>(std::ceil((decimal_digits + guard_digits) * 3.3219280948873623)) + 8;
}

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log2(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_log2(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow(long e) const {
  BigFloat r(precision());
  mpfr_pow_si(r.value_, value_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(precision());
  mpfr_sqrt(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int significant) const {
  const int n = mpfr_snprintf(nullptr, 0, "%.*Rg", significant, value_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant, value_);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

void BigFloat::widen_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

}  // namespace gjms
