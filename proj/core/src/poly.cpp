#include "g2lab/poly.hpp"

#include <ostream>

#include "g2lab/errors.hpp"

namespace g2lab {

Monomial Monomial::param(const std::string& name, int exponent) {
  if (name.empty()) throw Error("parameter name must be nonempty");
  if (exponent <= 0) throw Error("monomial exponent must be positive");
  Monomial m;
  m.exp_[name] = exponent;
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [name, e] : exp_) d += e;
  return d;
}

int Monomial::exponent(const std::string& name) const {
  auto it = exp_.find(name);
  return it == exp_.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  for (const auto& [name, e] : o.exp_) m.exp_[name] += e;
  return m;
}

std::string Monomial::str() const {
  if (exp_.empty()) return "1";
  std::string s;
  for (const auto& [name, e] : exp_) {
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

Poly::Poly(Rational c) {
  if (!c.is_zero()) terms_.emplace(Monomial::unit(), std::move(c));
}

Poly Poly::monomial(Rational c, Monomial m) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Poly::to_rational() const {
  if (terms_.empty()) return Rational::zero();
  if (!is_constant()) throw Error("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial::unit());
  return it == terms_.end() ? Rational::zero() : it->second;
}

std::set<std::string> Poly::params() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m.factors()) out.insert(name);
  return out;
}

bool Poly::depends_on(const std::string& name) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(name) > 0) return true;
  return false;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly out;
  for (const auto& [m, pc] : p.terms_) out.add_term(m, c * pc);
  return out;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly Poly::substitute(const std::map<std::string, Rational>& bindings) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [name, e] : m.factors()) {
      auto it = bindings.find(name);
      if (it == bindings.end()) {
        rest = rest * Monomial::param(name, e);
      } else {
        for (int k = 0; k < e; ++k) coeff *= it->second;
      }
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Poly Poly::derivative(const std::string& name) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(name);
    if (e == 0) continue;
    Monomial rest;
    for (const auto& [pname, pe] : m.factors()) {
      if (pname == name) {
        if (pe > 1) rest = rest * Monomial::param(pname, pe - 1);
      } else {
        rest = rest * Monomial::param(pname, pe);
      }
    }
    out.add_term(rest, Rational(e) * c);
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    Rational a = c.abs();
    std::string piece;
    if (m.is_unit()) {
      piece = a.str();
    } else if (a.is_one()) {
      piece = m.str();
    } else {
      piece = a.str() + "*" + m.str();
    }
    if (s.empty()) {
      s = (c.sign() < 0 ? "-" : "") + piece;
    } else {
      s += (c.sign() < 0 ? "-" : "+") + piece;
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace g2lab
