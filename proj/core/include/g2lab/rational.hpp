#pragma once

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace g2lab {

// Arbitrary-precision rational number, always in lowest terms with positive
// denominator. Thin value-semantics wrapper over GMP's mpq_t.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); }
  Rational(int n) : Rational(static_cast<long>(n)) {}
  Rational(long num, long den);

  Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
  Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
  Rational& operator=(const Rational& o) { mpq_set(q_, o.q_); return *this; }
  Rational& operator=(Rational&& o) noexcept { mpq_swap(q_, o.q_); return *this; }
  ~Rational() { mpq_clear(q_); }

  static Rational zero() { return {}; }
  static Rational one() { return {1}; }

  // Accepts "p", "-p", "p/q" with optional leading '+'. Throws Error.
  static Rational parse(const std::string& text);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  bool is_integer() const;
  int sign() const { return mpq_sgn(q_); }

  Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
  Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
  Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
  Rational& operator/=(const Rational& o);  // throws Error on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  Rational abs() const;
  Rational inverse() const;  // throws Error on zero
  double to_double() const { return mpq_get_d(q_); }

  std::string str() const;           // "p" or "p/q"
  std::string str_fraction() const;  // always "p/q", even for integers

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace g2lab
