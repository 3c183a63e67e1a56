#pragma once

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "g2lab/errors.hpp"
#include "g2lab/multi_index.hpp"

namespace g2lab {

template <typename R>
concept CoefficientRing = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  { R::zero() } -> std::convertible_to<R>;
  { R::one() } -> std::convertible_to<R>;
};

// Exterior form on an n-dimensional coframe with coefficients in R, stored as
// a sparse sum over strictly increasing multi-indices. Mixed degree is
// allowed; zero coefficients are never stored.
template <CoefficientRing R>
class Form {
 public:
  explicit Form(int n) : n_(check_dim(n)) {}

  static Form zero(int n) { return Form(n); }

  static Form scalar(int n, R c) {
    Form f(n);
    f.add_term(MultiIndex::empty(), std::move(c));
    return f;
  }

  static Form monomial(int n, const MultiIndex& idx, R c) {
    Form f(n);
    f.check_range(idx);
    f.add_term(idx, std::move(c));
    return f;
  }

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, R>& terms() const { return terms_; }

  R coeff(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? R::zero() : it->second;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [idx, c] : terms_)
      if (idx.degree() != d) return false;
    return true;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& [idx, c] : terms_)
      if (idx.degree() > d) d = idx.degree();
    return d;
  }

  int min_degree() const {
    if (terms_.empty()) return 0;
    int d = n_;
    for (const auto& [idx, c] : terms_)
      if (idx.degree() < d) d = idx.degree();
    return d;
  }

  Form degree_part(int p) const {
    Form out(n_);
    for (const auto& [idx, c] : terms_)
      if (idx.degree() == p) out.terms_.emplace(idx, c);
    return out;
  }

  Form& operator+=(const Form& o) {
    check_same_dim(o);
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
  }

  Form& operator-=(const Form& o) {
    check_same_dim(o);
    for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
    return *this;
  }

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }

  Form operator-() const {
    Form out(n_);
    for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, -c);
    return out;
  }

  friend Form operator*(const R& c, const Form& f) {
    Form out(f.n_);
    for (const auto& [idx, fc] : f.terms_) out.add_term(idx, c * fc);
    return out;
  }

  bool operator==(const Form& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  void add_term(const MultiIndex& idx, R c) {
    check_range(idx);
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(idx, std::move(c));
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  template <typename S, typename Fn>
  Form<S> map_coefficients(Fn&& fn) const {
    Form<S> out(n_);
    for (const auto& [idx, c] : terms_) out.add_term(idx, fn(c));
    return out;
  }

 private:
  static int check_dim(int n) {
    if (n < 1 || n > 9) throw DimensionError("form dimension out of range 1..9");
    return n;
  }
  void check_range(const MultiIndex& idx) const {
    if (idx.mask() >> n_) throw IndexError("multi-index exceeds form dimension");
  }
  void check_same_dim(const Form& o) const {
    if (n_ != o.n_) throw DimensionError("forms live on coframes of different dimension");
  }

  int n_;
  std::map<MultiIndex, R> terms_;
};

template <CoefficientRing R>
Form<R> wedge(const Form<R>& a, const Form<R>& b) {
  if (a.dim() != b.dim()) throw DimensionError("wedge of forms on different coframes");
  Form<R> out(a.dim());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      int s = MultiIndex::merge_sign(ia, ib);
      if (s == 0) continue;
      R c = ca * cb;
      if (s < 0) c = -c;
      out.add_term(ia.unite(ib), std::move(c));
    }
  return out;
}

// Interior product with the frame vector dual to e^k, extended as an
// antiderivation: each term containing k drops it with sign
// (-1)^(number of indices below k).
template <CoefficientRing R>
Form<R> contract(int k, const Form<R>& f) {
  Form<R> out(f.dim());
  for (const auto& [idx, c] : f.terms()) {
    if (idx.degree() == 0 || !idx.contains(k)) continue;
    R v = idx.count_below(k) % 2 == 0 ? c : -c;
    out.add_term(idx.remove(k), std::move(v));
  }
  return out;
}

// Degree-wise sign flip: +1 on degrees 0,3 mod 4 and -1 on degrees 1,2 mod 4.
template <CoefficientRing R>
Form<R> sigma(const Form<R>& f) {
  Form<R> out(f.dim());
  for (const auto& [idx, c] : f.terms()) {
    int p = idx.degree() % 4;
    bool flip = p == 1 || p == 2;
    out.add_term(idx, flip ? -c : c);
  }
  return out;
}

// Top coefficient of a ^ sigma(b); the bilinear pairing used throughout.
template <CoefficientRing R>
R q_pair(const Form<R>& a, const Form<R>& b) {
  return wedge(a, sigma(b)).coeff(MultiIndex::full(a.dim()));
}

// All degree-p multi-indices on n slots, in the canonical (degree, lex) order.
inline std::vector<MultiIndex> degree_indices(int n, int p) {
  std::vector<MultiIndex> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) != p) continue;
    std::vector<int> iv;
    for (int k = 1; k <= n; ++k)
      if ((m >> (k - 1)) & 1u) iv.push_back(k);
    out.push_back(MultiIndex::from_indices(iv));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Coordinates of the degree-p part with respect to degree_indices(dim, p).
template <CoefficientRing R>
std::vector<R> coordinates(const Form<R>& f, int p) {
  std::vector<MultiIndex> basis = degree_indices(f.dim(), p);
  std::vector<R> out;
  out.reserve(basis.size());
  for (const auto& idx : basis) out.push_back(f.coeff(idx));
  return out;
}

// Antisymmetric evaluation of the degree-p part on a frame-vector tuple.
template <CoefficientRing R>
R eval_indices(const Form<R>& f, std::vector<int> idx) {
  int sign = 1;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] == idx[j + 1]) return R::zero();
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  R c = f.coeff(MultiIndex::from_indices(idx));
  return sign < 0 ? -c : c;
}

template <CoefficientRing R>
Form<R> from_coordinates(int n, int p, const std::vector<R>& v) {
  std::vector<MultiIndex> basis = degree_indices(n, p);
  if (v.size() != basis.size()) throw DimensionError("coordinate vector has wrong length");
  Form<R> out(n);
  for (std::size_t k = 0; k < basis.size(); ++k) out.add_term(basis[k], v[k]);
  return out;
}

}  // namespace g2lab
