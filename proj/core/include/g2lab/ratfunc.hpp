#pragma once

#include <string>
#include <utility>
#include <vector>

#include "g2lab/poly.hpp"
#include "g2lab/rational.hpp"

namespace g2lab {

// Dense univariate polynomial over Rational; coefficient i multiplies x^i.
// No trailing zero coefficients; the zero polynomial has an empty vector.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(Rational c);
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly variable();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(int i) const;
  Rational lead() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  // Euclidean division; the divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& den) const;
  static UniPoly gcd(UniPoly a, UniPoly b);  // monic, gcd(0,0) = 0

  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  UniPoly monic() const;

  std::string str(const std::string& var) const;  // descending powers

 private:
  void trim();
  std::vector<Rational> c_;
};

// Rational function in one named variable over the rationals, stored reduced
// with a monic denominator. Constants are compatible with any variable name;
// mixing two genuine variables raises Error.
class RatFunc {
 public:
  RatFunc() : den_(Rational::one()) {}
  RatFunc(Rational c, std::string var = "t");
  RatFunc(long n) : RatFunc(Rational(n)) {}
  RatFunc(int n) : RatFunc(Rational(n)) {}
  static RatFunc variable(const std::string& name = "t");
  static RatFunc from_fraction(UniPoly num, UniPoly den, const std::string& var);
  // The polynomial may involve only `var`; other parameters raise Error.
  static RatFunc from_poly(const Poly& p, const std::string& var);
  static RatFunc zero() { return {}; }
  static RatFunc one() { return {Rational::one()}; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  const std::string& var() const { return var_; }
  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  Rational to_rational() const;  // throws Error unless constant
  Poly to_poly() const;          // throws Error unless polynomial

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(const Rational& c, const RatFunc& f) { return RatFunc(c) * f; }
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const;

  RatFunc inverse() const;     // throws Error on zero
  RatFunc derivative() const;  // formal d/d(var)
  Rational eval(const Rational& x) const;  // throws Error at poles

  std::string str() const;

 private:
  void reduce();
  static std::string combine_var(const RatFunc& a, const RatFunc& b);
  std::string var_ = "t";
  UniPoly num_;
  UniPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace g2lab
