#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gjms/big_rational.hpp"

namespace gjms {

/// One of the transcendental basis elements {1, log 2, ζ(s) for odd s >= 3}.
struct Atom {
  enum class Kind { One, Log2, Zeta };

  Kind kind = Kind::One;
  int zeta_arg = 0;  // only meaningful for Kind::Zeta

  static Atom one() { return {Kind::One, 0}; }
  static Atom log2() { return {Kind::Log2, 0}; }
  /// Throws InvalidInput unless s is odd and >= 3.
  static Atom zeta(int s);

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct ZetaTerm {
  Atom atom;
  int pi_pow = 0;
  BigRational coeff;

  friend bool operator==(const ZetaTerm&, const ZetaTerm&) = default;
};

/// Exact rational linear combination of atom·π^p. Normalized: one entry per
/// (atom, π power), never a zero coefficient. Two expressions are equal iff
/// their normalized term sets coincide.
class ZetaExpr {
 public:
  ZetaExpr() = default;
  static ZetaExpr term(Atom atom, int pi_pow, const BigRational& coeff);
  static ZetaExpr rational(const BigRational& q) { return term(Atom::one(), 0, q); }

  /// Terms ordered by atom (1, log 2, ζ(3), ζ(5), ...) then by π power.
  std::vector<ZetaTerm> terms() const;
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Zero when the (atom, π power) pair is absent.
  BigRational coeff(Atom atom, int pi_pow) const;

  ZetaExpr& operator+=(const ZetaExpr& rhs);
  ZetaExpr& operator-=(const ZetaExpr& rhs);
  ZetaExpr& operator*=(const BigRational& scalar);
  ZetaExpr times_pi(int power) const;

  friend ZetaExpr operator+(ZetaExpr a, const ZetaExpr& b) { return a += b; }
  friend ZetaExpr operator-(ZetaExpr a, const ZetaExpr& b) { return a -= b; }
  friend ZetaExpr operator*(ZetaExpr a, const BigRational& q) { return a *= q; }
  friend ZetaExpr operator*(const BigRational& q, ZetaExpr a) { return a *= q; }
  ZetaExpr operator-() const { return *this * BigRational(-1); }

  friend bool operator==(const ZetaExpr&, const ZetaExpr&) = default;

  /// e.g. "1/4 log(2) - 3/8 zeta(3)/pi^2"
  std::string to_plain() const;
  /// e.g. "\frac{1}{4}\log 2-\frac{3}{8}\frac{\zeta(3)}{\pi^{2}}"
  std::string to_latex() const;
  /// Array of {"atom": "one"|"log2"|{"zeta": s}, "pi_pow": p, "coeff": "n/d"}.
  std::string to_json() const;
  /// Inverse of to_json. Throws std::invalid_argument on malformed input.
  static ZetaExpr from_json(const std::string& text);

 private:
  using Key = std::pair<Atom, int>;
  void add_term(const Key& key, const BigRational& coeff);

  std::map<Key, BigRational> terms_;
};

}  // namespace gjms
