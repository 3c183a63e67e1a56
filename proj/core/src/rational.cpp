#include "g2lab/rational.hpp"

#include <cctype>
#include <ostream>

#include "g2lab/errors.hpp"

namespace g2lab {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_, q_);
  return r;
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.q_, q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

bool Rational::is_integer() const {
  return mpz_cmp_si(mpq_denref(q_), 1) == 0;
}

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  if (!s.empty() && (s[0] == '+')) s = s.substr(1);
  if (s.empty()) throw Error("empty rational literal");
  std::size_t start = s[0] == '-' ? 1 : 0;
  if (start == s.size()) throw Error("malformed rational literal: " + text);
  std::size_t slash = s.find('/');
  auto digits = [](const std::string& part) {
    if (part.empty()) return false;
    for (char c : part)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(s.substr(start))) throw Error("malformed rational literal: " + text);
  } else {
    if (!digits(s.substr(start, slash - start)) || !digits(s.substr(slash + 1)))
      throw Error("malformed rational literal: " + text);
  }
  Rational r;
  if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
    throw Error("malformed rational literal: " + text);
  if (mpz_sgn(mpq_denref(r.q_)) == 0) throw Error("rational with zero denominator: " + text);
  mpq_canonicalize(r.q_);
  return r;
}

std::string Rational::str() const {
  char* raw = mpq_get_str(nullptr, 10, q_);
  std::string s(raw);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(raw, s.size() + 1);
  return s;
}

std::string Rational::str_fraction() const {
  std::string s = str();
  if (s.find('/') == std::string::npos) s += "/1";
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace g2lab
