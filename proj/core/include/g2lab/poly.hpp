#pragma once

#include <map>
#include <set>
#include <string>

#include "g2lab/rational.hpp"

namespace g2lab {

// Product of named parameters with positive integer exponents; the empty
// monomial is 1. Ordered by descending exponent at the first differing name
// (alphabetical), so a polynomial iterates as "a^2, a*mu, mu^2" and the
// constant term comes last.
class Monomial {
 public:
  Monomial() = default;
  static Monomial unit() { return {}; }
  static Monomial param(const std::string& name, int exponent = 1);

  bool is_unit() const { return exp_.empty(); }
  int total_degree() const;
  int exponent(const std::string& name) const;
  const std::map<std::string, int>& factors() const { return exp_; }

  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
  bool operator<(const Monomial& o) const {
    auto i = exp_.begin();
    auto j = o.exp_.begin();
    for (; i != exp_.end() && j != o.exp_.end(); ++i, ++j) {
      if (i->first != j->first) return i->first < j->first;
      if (i->second != j->second) return i->second > j->second;
    }
    return i != exp_.end();
  }

  std::string str() const;  // "a", "mu^2", "a*mu^2"; "1" for the unit

 private:
  std::map<std::string, int> exp_;  // name -> exponent > 0
};

// Multivariate polynomial over Rational in named parameters, stored as a
// canonical sorted sum of monomials with no zero terms. This is the exact
// coefficient ring for all static structure computations.
class Poly {
 public:
  Poly() = default;
  Poly(Rational c);
  Poly(long n) : Poly(Rational(n)) {}
  Poly(int n) : Poly(Rational(n)) {}

  static Poly zero() { return {}; }
  static Poly one() { return Poly(Rational::one()); }
  static Poly param(const std::string& name) { return monomial(Rational::one(), Monomial::param(name)); }
  static Poly monomial(Rational c, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term as a rational; throws Error if the polynomial has parameters.
  Rational to_rational() const;
  Rational constant_term() const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::set<std::string> params() const;
  bool depends_on(const std::string& name) const;
  int total_degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  Poly operator-() const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // Substitutes rationals for the named parameters; missing names stay symbolic.
  Poly substitute(const std::map<std::string, Rational>& bindings) const;
  // Formal partial derivative with respect to one parameter.
  Poly derivative(const std::string& name) const;

  std::string str() const;  // "0", "-1/2*a", "mu^2-2*mu+1"

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace g2lab
