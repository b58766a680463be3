#include "gjms/zeta_expr.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gjms/errors.hpp"

namespace gjms {

Atom Atom::zeta(int s) {
  if (s < 3 || s % 2 == 0) throw InvalidInput("zeta atom requires an odd argument >= 3");
  return {Kind::Zeta, s};
}

ZetaExpr ZetaExpr::term(Atom atom, int pi_pow, const BigRational& coeff) {
  ZetaExpr e;
  e.add_term({atom, pi_pow}, coeff);
  return e;
}

void ZetaExpr::add_term(const Key& key, const BigRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<ZetaTerm> ZetaExpr::terms() const {
  std::vector<ZetaTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({key.first, key.second, c});
  return out;
}

BigRational ZetaExpr::coeff(Atom atom, int pi_pow) const {
  const auto it = terms_.find({atom, pi_pow});
  return it == terms_.end() ? BigRational(0) : it->second;
}

ZetaExpr& ZetaExpr::operator+=(const ZetaExpr& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

ZetaExpr& ZetaExpr::operator-=(const ZetaExpr& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

ZetaExpr& ZetaExpr::operator*=(const BigRational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

ZetaExpr ZetaExpr::times_pi(int power) const {
  ZetaExpr out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(Key{key.first, key.second + power}, c);
  return out;
}

namespace {

std::string atom_plain(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::One: return "";
    case Atom::Kind::Log2: return "log(2)";
    case Atom::Kind::Zeta: return "zeta(" + std::to_string(a.zeta_arg) + ")";
  }
  return "";
}

std::string atom_latex(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::One: return "";
    case Atom::Kind::Log2: return "\\log 2";
    case Atom::Kind::Zeta: return "\\zeta(" + std::to_string(a.zeta_arg) + ")";
  }
  return "";
}

std::string pi_plain(int p) {
  if (p == 1) return "pi";
  return "pi^" + std::to_string(p);
}

std::string pi_latex(int p) {
  if (p == 1) return "\\pi";
  return "\\pi^{" + std::to_string(p) + "}";
}

}  // namespace

std::string ZetaExpr::to_plain() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms()) {
    const BigRational mag = t.coeff.abs();
    if (first) {
      if (t.coeff.sign() < 0) os << "-";
    } else {
      os << (t.coeff.sign() < 0 ? " - " : " + ");
    }
    first = false;

    std::string body = atom_plain(t.atom);
    if (t.pi_pow > 0) body += body.empty() ? pi_plain(t.pi_pow) : "*" + pi_plain(t.pi_pow);
    if (t.pi_pow < 0) body += (body.empty() ? "1/" : "/") + pi_plain(-t.pi_pow);

    if (body.empty()) {
      os << mag.to_string();
    } else if (mag == BigRational(1)) {
      os << body;
    } else {
      os << mag.to_string() << " " << body;
    }
  }
  return os.str();
}

std::string ZetaExpr::to_latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms()) {
    const BigRational mag = t.coeff.abs();
    if (t.coeff.sign() < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;

    std::string coeff;
    if (mag.is_integer()) {
      coeff = mag.numerator().get_str();
    } else {
      coeff = "\\frac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}";
    }
    const std::string atom = atom_latex(t.atom);
    std::string body;
    if (t.pi_pow < 0) {
      body = "\\frac{" + (atom.empty() ? std::string("1") : atom) + "}{" + pi_latex(-t.pi_pow) + "}";
    } else if (t.pi_pow > 0) {
      body = atom + pi_latex(t.pi_pow);
    } else {
      body = atom;
    }
    if (body.empty()) {
      os << coeff;
    } else if (mag == BigRational(1)) {
      os << body;
    } else {
      os << coeff << body;
    }
  }
  return os.str();
}

std::string ZetaExpr::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : terms()) {
    nlohmann::json atom;
    switch (t.atom.kind) {
      case Atom::Kind::One: atom = "one"; break;
      case Atom::Kind::Log2: atom = "log2"; break;
      case Atom::Kind::Zeta: atom = {{"zeta", t.atom.zeta_arg}}; break;
    }
    arr.push_back({{"atom", atom}, {"pi_pow", t.pi_pow}, {"coeff", t.coeff.to_string()}});
  }
  return arr.dump();
}

ZetaExpr ZetaExpr::from_json(const std::string& text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("ZetaExpr JSON: ") + e.what());
  }
  if (!arr.is_array()) throw std::invalid_argument("ZetaExpr JSON: expected an array");
  ZetaExpr out;
  try {
    for (const auto& item : arr) {
      const auto& atom_json = item.at("atom");
      Atom atom;
      if (atom_json.is_string()) {
        const auto name = atom_json.get<std::string>();
        if (name == "one") {
          atom = Atom::one();
        } else if (name == "log2") {
          atom = Atom::log2();
        } else {
          throw std::invalid_argument("ZetaExpr JSON: unknown atom '" + name + "'");
        }
      } else {
        atom = Atom::zeta(atom_json.at("zeta").get<int>());
      }
      out.add_term({atom, item.at("pi_pow").get<int>()},
                   BigRational::parse(item.at("coeff").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("ZetaExpr JSON: ") + e.what());
  }
  return out;
}

}  // namespace gjms
