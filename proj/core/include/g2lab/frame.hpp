#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "g2lab/errors.hpp"
#include "g2lab/form.hpp"
#include "g2lab/ratfunc.hpp"

namespace g2lab {

// Coefficient rings whose elements can depend on the interval coordinate
// provide a formal derivative; everything else is constant in time.
template <CoefficientRing R>
struct TimeDerivative {
  static constexpr bool available = false;
  static R apply(const R&) { return R::zero(); }
};

template <>
struct TimeDerivative<RatFunc> {
  static constexpr bool available = true;
  static RatFunc apply(const RatFunc& c) { return c.derivative(); }
};

// Value of the degree-2 part of f on the frame vector pair (e_a, e_b).
template <CoefficientRing R>
R eval2(const Form<R>& f, int a, int b) {
  if (a == b) return R::zero();
  R c = f.coeff(MultiIndex::from_indices({std::min(a, b), std::max(a, b)}));
  return a < b ? c : -c;
}

// Coframe e^1..e^n of a Lie algebra (or a time-dependent extension of one),
// carrying the table de^i and the flat metric that declares it orthonormal.
// When dt_index is set, that coframe slot is the interval coordinate and the
// exterior derivative adds dt wedge (d/dt coefficient) terms.
template <CoefficientRing R>
class Frame {
 public:
  explicit Frame(int n) : n_(n), d_(static_cast<std::size_t>(n), Form<R>(n)) {
    if (n < 1 || n > 9) throw DimensionError("frame dimension out of range 1..9");
  }

  int dim() const { return n_; }

  void set_d(int i, Form<R> de) {
    check_slot(i);
    if (de.dim() != n_) throw DimensionError("differential lives on a different coframe");
    for (const auto& [idx, c] : de.terms())
      if (idx.degree() != 2) throw Error("de^i must be a 2-form");
    d_[static_cast<std::size_t>(i - 1)] = std::move(de);
  }

  const Form<R>& d_of(int i) const {
    check_slot(i);
    return d_[static_cast<std::size_t>(i - 1)];
  }

  bool orthonormal() const { return orthonormal_; }
  void set_orthonormal(bool v) { orthonormal_ = v; }

  std::optional<int> dt_index() const { return dt_index_; }
  void set_dt_index(int i) {
    check_slot(i);
    dt_index_ = i;
  }

  Form<R> d(const Form<R>& f) const {
    if (f.dim() != n_) throw DimensionError("form lives on a different coframe");
    Form<R> out(n_);
    Form<R> dt_leg(n_);
    if (dt_index_ && TimeDerivative<R>::available)
      dt_leg = Form<R>::monomial(n_, MultiIndex::single(*dt_index_), R::one());
    for (const auto& [idx, c] : f.terms()) {
      auto iv = idx.indices();
      for (std::size_t k = 0; k < iv.size(); ++k) {
        R signed_c = k % 2 == 0 ? c : -c;
        Form<R> rest = Form<R>::monomial(n_, idx.remove(iv[k]), std::move(signed_c));
        out += wedge(d_of(iv[k]), rest);
      }
      if (!dt_leg.is_zero()) {
        R dc = TimeDerivative<R>::apply(c);
        if (!dc.is_zero())
          out += wedge(dt_leg, Form<R>::monomial(n_, idx, std::move(dc)));
      }
    }
    return out;
  }

  // Twisted differential d + H wedge; H must have odd-degree terms only.
  Form<R> d_twisted(const Form<R>& H, const Form<R>& f) const {
    for (const auto& [idx, c] : H.terms())
      if (idx.degree() % 2 == 0) throw Error("twist form must have odd degree");
    return d(f) + wedge(H, f);
  }

  std::vector<Form<R>> d2_residuals() const {
    std::vector<Form<R>> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) out.push_back(d(d_of(i)));
    return out;
  }

  bool check_d2() const {
    for (const auto& r : d2_residuals())
      if (!r.is_zero()) return false;
    return true;
  }

  // tr(ad) vanishes for every frame vector; structure constants are read off
  // the table via de^k(e_i, e_j) = -c^k_ij.
  bool is_unimodular() const {
    for (int i = 1; i <= n_; ++i) {
      R tr = R::zero();
      for (int j = 1; j <= n_; ++j) tr = tr - eval2(d_of(j), i, j);
      if (!tr.is_zero()) return false;
    }
    return true;
  }

  // Star of e^I is merge_sign(I, I^c) e^(I^c); orientation e^1...e^n.
  Form<R> hodge_star(const Form<R>& f) const {
    if (!orthonormal_) throw MetricError("hodge star needs a declared-orthonormal frame");
    if (f.dim() != n_) throw DimensionError("form lives on a different coframe");
    Form<R> out(n_);
    for (const auto& [idx, c] : f.terms()) {
      MultiIndex comp = idx.complement(n_);
      int s = MultiIndex::merge_sign(idx, comp);
      out.add_term(comp, s < 0 ? -c : c);
    }
    return out;
  }

  Form<R> box_companion(const Form<R>& f) const { return hodge_star(sigma(f)); }

  R q_volume(const Form<R>& f) const { return q_pair(box_companion(f), f); }

 private:
  void check_slot(int i) const {
    if (i < 1 || i > n_) throw IndexError("coframe slot out of range");
  }
  int n_;
  std::vector<Form<R>> d_;
  bool orthonormal_ = true;
  std::optional<int> dt_index_;
};

template <typename S, CoefficientRing R, typename Fn>
Frame<S> map_frame(const Frame<R>& fr, Fn&& fn) {
  Frame<S> out(fr.dim());
  for (int i = 1; i <= fr.dim(); ++i)
    out.set_d(i, fr.d_of(i).template map_coefficients<S>(fn));
  out.set_orthonormal(fr.orthonormal());
  if (fr.dt_index()) out.set_dt_index(*fr.dt_index());
  return out;
}

// Same form on a coframe extended by extra trailing slots.
template <CoefficientRing R>
Form<R> embed(const Form<R>& f, int n_new) {
  if (n_new < f.dim()) throw DimensionError("cannot embed into a smaller coframe");
  Form<R> out(n_new);
  for (const auto& [idx, c] : f.terms()) out.add_term(idx, c);
  return out;
}

// N x S^1: one closed extra coframe direction at slot n+1.
template <CoefficientRing R>
Frame<R> extend_product_circle(const Frame<R>& base) {
  Frame<R> out(base.dim() + 1);
  for (int i = 1; i <= base.dim(); ++i) out.set_d(i, embed(base.d_of(i), base.dim() + 1));
  out.set_orthonormal(base.orthonormal());
  return out;
}

// N x interval with coframe E^i = f_i(t) e^i and E^(n+1) = dt:
//   dE^i = (f_i'/f_i) dt ^ E^i + sum over j<k of m^i_jk f_i/(f_j f_k) E^jk
// where de^i = sum m^i_jk e^jk on the base. The scales must be nonzero.
inline Frame<RatFunc> extend_interval(const Frame<Rational>& base,
                                      const std::vector<RatFunc>& scales) {
  const int n = base.dim();
  if (static_cast<int>(scales.size()) != n)
    throw DimensionError("one scale function per base coframe direction");
  for (const auto& s : scales)
    if (s.is_zero()) throw Error("interval extension with a vanishing scale");
  Frame<RatFunc> out(n + 1);
  out.set_dt_index(n + 1);
  Form<RatFunc> dt = Form<RatFunc>::monomial(n + 1, MultiIndex::single(n + 1), RatFunc::one());
  for (int i = 1; i <= n; ++i) {
    const RatFunc& fi = scales[static_cast<std::size_t>(i - 1)];
    Form<RatFunc> de(n + 1);
    RatFunc log_deriv = fi.derivative() / fi;
    if (!log_deriv.is_zero()) {
      Form<RatFunc> Ei = Form<RatFunc>::monomial(n + 1, MultiIndex::single(i), RatFunc::one());
      de += log_deriv * wedge(dt, Ei);
    }
    for (const auto& [idx, m] : base.d_of(i).terms()) {
      auto jk = idx.indices();
      const RatFunc& fj = scales[static_cast<std::size_t>(jk[0] - 1)];
      const RatFunc& fk = scales[static_cast<std::size_t>(jk[1] - 1)];
      de.add_term(idx, RatFunc(m) * fi / (fj * fk));
    }
    out.set_d(i, de);
  }
  out.set_orthonormal(base.orthonormal());
  return out;
}

}  // namespace g2lab
