#include "g2lab/ratfunc.hpp"

#include <ostream>
#include <sstream>

#include "g2lab/errors.hpp"

namespace g2lab {

UniPoly::UniPoly(Rational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() {
  return UniPoly(std::vector<Rational>{Rational::zero(), Rational::one()});
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational::zero();
  return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::lead() const {
  if (c_.empty()) return Rational::zero();
  return c_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational::zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational::zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational::zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  if (c.is_zero()) return {};
  std::vector<Rational> out = p.c_;
  for (auto& x : out) x *= c;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const { return Rational(-1) * *this; }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& den) const {
  if (den.is_zero()) throw Error("polynomial division by zero");
  UniPoly rem = *this;
  std::vector<Rational> quot;
  int dq = degree() - den.degree();
  if (dq < 0) return {UniPoly{}, rem};
  quot.assign(static_cast<std::size_t>(dq) + 1, Rational::zero());
  const Rational lead_inv = den.lead().inverse();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int k = rem.degree() - den.degree();
    Rational f = rem.lead() * lead_inv;
    quot[static_cast<std::size_t>(k)] = f;
    std::vector<Rational> sub(static_cast<std::size_t>(k), Rational::zero());
    sub.push_back(f);
    rem -= UniPoly(std::move(sub)) * den;
  }
  return {UniPoly(std::move(quot)), rem};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> out(c_.size() - 1, Rational::zero());
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return UniPoly(std::move(out));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = Rational::zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return lead().inverse() * *this;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? "-" : "+");
    }
    Rational a = c.abs();
    if (i == 0) {
      os << a.str();
      continue;
    }
    if (!a.is_one()) os << a.str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

RatFunc::RatFunc(Rational c, std::string var)
    : var_(std::move(var)), num_(std::move(c)), den_(Rational::one()) {}

RatFunc RatFunc::variable(const std::string& name) {
  RatFunc f;
  f.var_ = name;
  f.num_ = UniPoly::variable();
  return f;
}

RatFunc RatFunc::from_fraction(UniPoly num, UniPoly den, const std::string& var) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
  RatFunc f;
  f.var_ = var;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  f.reduce();
  return f;
}

RatFunc RatFunc::from_poly(const Poly& p, const std::string& var) {
  std::vector<Rational> coeffs;
  for (const auto& [mono, c] : p.terms()) {
    int deg = 0;
    for (const auto& [name, e] : mono.factors()) {
      if (name != var)
        throw Error("polynomial depends on parameter '" + name + "', expected only '" + var + "'");
      deg = e;
    }
    if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(static_cast<std::size_t>(deg) + 1, Rational::zero());
    coeffs[static_cast<std::size_t>(deg)] = c;
  }
  RatFunc f;
  f.var_ = var;
  f.num_ = UniPoly(std::move(coeffs));
  return f;
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = UniPoly(Rational::one());
    return;
  }
  UniPoly g = UniPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  Rational lead = den_.lead();
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

std::string RatFunc::combine_var(const RatFunc& a, const RatFunc& b) {
  if (a.is_constant()) return b.var_;
  if (b.is_constant()) return a.var_;
  if (a.var_ != b.var_)
    throw Error("mixing rational functions in variables '" + a.var_ + "' and '" + b.var_ + "'");
  return a.var_;
}

Rational RatFunc::to_rational() const {
  if (!is_constant()) throw Error("rational function is not constant: " + str());
  return num_.coeff(0) / den_.coeff(0);
}

Poly RatFunc::to_poly() const {
  if (!is_polynomial()) throw Error("rational function has a nontrivial denominator: " + str());
  Rational inv = den_.coeff(0).inverse();
  Poly out = Poly::zero();
  for (int i = 0; i <= num_.degree(); ++i) {
    Rational c = num_.coeff(i) * inv;
    if (c.is_zero()) continue;
    Monomial m = i == 0 ? Monomial::unit() : Monomial::param(var_, i);
    out += Poly::monomial(c, m);
  }
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  var_ = combine_var(*this, o);
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  var_ = combine_var(*this, o);
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  var_ = combine_var(*this, o);
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error("division by zero rational function");
  var_ = combine_var(*this, o);
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc f = *this;
  f.num_ = -f.num_;
  return f;
}

bool RatFunc::operator==(const RatFunc& o) const {
  if (num_ == o.num_ && den_ == o.den_) {
    return is_constant() || o.is_constant() || var_ == o.var_;
  }
  return false;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error("inverse of zero rational function");
  return from_fraction(den_, num_, var_);
}

RatFunc RatFunc::derivative() const {
  UniPoly n = num_.derivative() * den_ - num_ * den_.derivative();
  UniPoly d = den_ * den_;
  return from_fraction(std::move(n), std::move(d), var_);
}

Rational RatFunc::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw Error("rational function pole at " + x.str());
  return num_.eval(x) / d;
}

std::string RatFunc::str() const {
  std::string ns = num_.str(var_);
  if (den_.degree() == 0) return ns;
  std::string ds = den_.str(var_);
  bool num_simple = num_.is_zero() ||
                    (num_.degree() == 0) ||
                    (num_.degree() > 0 && ns.find('+') == std::string::npos &&
                     ns.rfind('-') == (ns[0] == '-' ? 0u : std::string::npos));
  std::ostringstream os;
  if (num_simple)
    os << ns;
  else
    os << "(" << ns << ")";
  os << "/(" << ds << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

}  // namespace g2lab
