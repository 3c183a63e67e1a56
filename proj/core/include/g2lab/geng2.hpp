#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "g2lab/form.hpp"
#include "g2lab/frame.hpp"
#include "g2lab/linsolve.hpp"
#include "g2lab/su3.hpp"

namespace g2lab {

// Even and odd structure forms on a 7-slot carrier, parametrized by a point
// (c, s) on the rational circle; alpha is the coframe slot of the circle
// factor. With (c, s) = (cos t, sin t):
//   even = c + s w - c (p- ^ a + w^2/2) + s p+ ^ a - s w^3/6
//   odd  = s a - c (p+ + w ^ a) - s p- - s w^2/2 ^ a + c vol
template <CoefficientRing R>
struct GenG2Pair {
  Form<R> even, odd;
};

template <CoefficientRing R>
GenG2Pair<R> build_structure_forms(const Su3Structure<R>& s6, const Rational& c,
                                   const Rational& s, int alpha_slot = 7) {
  if (!(c * c + s * s == Rational::one())) throw Error("(c, s) must lie on the unit circle");
  const int n = alpha_slot;
  if (s6.dim() + 1 != n) throw DimensionError("circle slot must extend the carrier");
  Form<R> alpha = Form<R>::monomial(n, MultiIndex::single(alpha_slot), R::one());
  Form<R> w = embed(s6.omega, n), pp = embed(s6.psi_plus, n), pm = embed(s6.psi_minus, n);
  Form<R> w2 = wedge(w, w);
  Form<R> w3 = wedge(w2, w);
  Form<R> vol = R(Rational(1, 6)) * wedge(w3, alpha);
  GenG2Pair<R> out{Form<R>(n), Form<R>(n)};
  out.even = Form<R>::scalar(n, R(c)) + R(s) * w -
             R(c) * (wedge(pm, alpha) + R(Rational(1, 2)) * w2) + R(s) * wedge(pp, alpha) -
             R(s * Rational(1, 6)) * w3;
  out.odd = R(s) * alpha - R(c) * (pp + wedge(w, alpha)) - R(s) * pm -
            R(s * Rational(1, 2)) * wedge(w2, alpha) + R(c) * vol;
  return out;
}

// d_H rho and d_H rho_hat; both must vanish for strong integrability.
template <CoefficientRing R>
std::pair<Form<R>, Form<R>> strong_residuals(const Frame<R>& fr, const Form<R>& rho,
                                             const Form<R>& rho_hat, const Form<R>& H) {
  return {fr.d_twisted(H, rho), fr.d_twisted(H, rho_hat)};
}

// d_H rho - lambda rho_hat.
template <CoefficientRing R>
Form<R> weak_residual(const Frame<R>& fr, const Form<R>& rho, const Form<R>& rho_hat,
                      const Form<R>& H, const R& lambda) {
  return fr.d_twisted(H, rho) - lambda * rho_hat;
}

// Componentwise form of the weak condition for the odd structure form built
// from (omega, psi, eta):  d(eta) = lambda w ;  d(psi_-) = (H - lambda psi_+) ^ eta ;
// H ^ psi_- = -1/3 lambda w^3.
template <CoefficientRing R>
std::vector<std::pair<std::string, Form<R>>> weak_component_residuals(
    const Frame<R>& fr, const Su3Structure<R>& s, const Form<R>& H, const R& lambda) {
  if (!s.eta) throw Error("component equations need the contact form eta");
  const int n = fr.dim();
  Form<R> w = embed(s.omega, n), pp = embed(s.psi_plus, n), pm = embed(s.psi_minus, n),
          et = embed(*s.eta, n);
  std::vector<std::pair<std::string, Form<R>>> out;
  out.emplace_back("weak-eq-1", fr.d(et) - lambda * w);
  out.emplace_back("weak-eq-2", fr.d(pm) - wedge(H - lambda * pp, et));
  out.emplace_back("weak-eq-3",
                   wedge(H, pm) + R(Rational(1, 3)) * (lambda * wedge(w, wedge(w, w))));
  return out;
}

// Affine set {particular + span(basis)} of 3-forms, with an infeasibility
// witness naming the first failing residual coordinate.
template <typename R>
struct AffineFormSet {
  explicit AffineFormSet(int n) : particular(n) {}
  bool feasible = false;
  std::string bad_row_label;
  Form<R> particular;
  std::vector<Form<R>> basis;

  bool contains(const Form<R>& h) const {
    if (!feasible) return false;
    Form<R> delta = h - particular;
    int n = particular.dim();
    std::vector<MultiIndex> b3 = degree_indices(n, 3);
    std::vector<std::vector<R>> mat(b3.size(), std::vector<R>(basis.size(), R::zero()));
    std::vector<R> rhs;
    rhs.reserve(b3.size());
    for (std::size_t r = 0; r < b3.size(); ++r) rhs.push_back(delta.coeff(b3[r]));
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (std::size_t r = 0; r < b3.size(); ++r) mat[r][c] = basis[c].coeff(b3[r]);
    auto sol = solve_linear(std::move(mat), std::move(rhs), static_cast<int>(basis.size()));
    return sol.feasible;
  }
};

namespace detail {

// One affine equation in the unknown 3-form H: base + L(H) = 0 where L is
// H ^ mult, or d(H) when mult is absent.
template <typename R>
struct AffineEq {
  std::string label;
  Form<R> base;
  std::optional<Form<R>> mult;
};

template <typename R>
AffineFormSet<R> solve_affine_h(const Frame<R>& fr, const std::vector<AffineEq<R>>& eqs) {
  const int n = fr.dim();
  std::vector<MultiIndex> b3 = degree_indices(n, 3);
  std::vector<Form<R>> columns;
  columns.reserve(b3.size());
  std::vector<std::vector<R>> mat;
  std::vector<R> rhs;
  std::vector<std::string> labels;
  for (const auto& eq : eqs) {
    std::vector<Form<R>> lh;
    lh.reserve(b3.size());
    for (const auto& idx : b3) {
      Form<R> hj = Form<R>::monomial(n, idx, R::one());
      lh.push_back(eq.mult ? wedge(hj, *eq.mult) : fr.d(hj));
    }
    // Rows over every coordinate that appears anywhere in this equation.
    std::set<MultiIndex> support;
    for (const auto& [idx, c] : eq.base.terms()) support.insert(idx);
    for (const auto& f : lh)
      for (const auto& [idx, c] : f.terms()) support.insert(idx);
    for (const auto& idx : support) {
      std::vector<R> row;
      row.reserve(b3.size());
      for (const auto& f : lh) row.push_back(f.coeff(idx));
      mat.push_back(std::move(row));
      rhs.push_back(-eq.base.coeff(idx));
      labels.push_back(eq.label + " @ " + (idx.degree() == 0 ? "1" : idx.str()));
    }
  }
  auto sol = solve_linear(std::move(mat), std::move(rhs), static_cast<int>(b3.size()));
  AffineFormSet<R> out(n);
  if (!sol.feasible) {
    out.feasible = false;
    out.bad_row_label = labels[static_cast<std::size_t>(sol.bad_row)];
    return out;
  }
  out.feasible = true;
  out.particular = from_coordinates(n, 3, sol.particular);
  for (const auto& v : sol.nullspace) out.basis.push_back(from_coordinates(n, 3, v));
  return out;
}

}  // namespace detail

// Solutions H of d_H rho = lambda rho_hat, optionally with d H = 0 adjoined.
template <typename R>
AffineFormSet<R> solve_weak_h(const Frame<R>& fr, const Form<R>& rho, const Form<R>& rho_hat,
                              const R& lambda, bool require_closed = false) {
  std::vector<detail::AffineEq<R>> eqs;
  eqs.push_back({"weak", fr.d(rho) - lambda * rho_hat, rho});
  if (require_closed) eqs.push_back({"closed", Form<R>(fr.dim()), std::nullopt});
  return detail::solve_affine_h(fr, eqs);
}

// Solutions H of d_H rho = d_H rho_hat = 0, optionally with d H = 0.
template <typename R>
AffineFormSet<R> solve_strong_h(const Frame<R>& fr, const Form<R>& rho, const Form<R>& rho_hat,
                                bool require_closed = false) {
  std::vector<detail::AffineEq<R>> eqs;
  eqs.push_back({"strong-even", fr.d(rho), rho});
  eqs.push_back({"strong-odd", fr.d(rho_hat), rho_hat});
  if (require_closed) eqs.push_back({"closed", Form<R>(fr.dim()), std::nullopt});
  return detail::solve_affine_h(fr, eqs);
}

// Product-with-circle analysis: class membership on the 6-slot carrier on
// one side, existence of an H making the even pair strongly integrable on
// the other, and agreement of the two through H = pi2 ^ alpha.
template <typename R>
struct StrongProductAnalysis {
  explicit StrongProductAnalysis(int n6) : base(n6), pi2_alpha(n6 + 1) {}
  W2PlusResult<R> base;
  bool strong_exists = false;
  std::string infeasible_at;
  bool pi2_alpha_works = false;  // both strong residuals vanish for pi2 ^ alpha
  Form<R> pi2_alpha;
  bool biconditional_ok = false;
};

template <typename R>
StrongProductAnalysis<R> strong_product_analysis(const Frame<R>& fr6,
                                                 const Su3Structure<R>& s6) {
  StrongProductAnalysis<R> out(fr6.dim());
  out.base = analyze_w2plus(fr6, s6);
  Frame<R> fr7 = extend_product_circle(fr6);
  GenG2Pair<R> pair = build_structure_forms<R>(s6, Rational(0), Rational(1), fr6.dim() + 1);
  AffineFormSet<R> sols = solve_strong_h(fr7, pair.even, pair.odd);
  out.strong_exists = sols.feasible;
  if (!sols.feasible) out.infeasible_at = sols.bad_row_label;
  if (out.base.have_pi2) {
    Form<R> alpha = Form<R>::monomial(fr7.dim(), MultiIndex::single(fr7.dim()), R::one());
    out.pi2_alpha = wedge(embed(out.base.pi2, fr7.dim()), alpha);
    auto [r1, r2] = strong_residuals(fr7, pair.even, pair.odd, out.pi2_alpha);
    out.pi2_alpha_works = r1.is_zero() && r2.is_zero();
  }
  out.biconditional_ok = out.base.in_class ? (out.strong_exists && out.pi2_alpha_works)
                                           : !out.strong_exists;
  return out;
}

// d_H-closedness of the even form alone, with H closed, splits H into a
// carrier part and S ^ alpha; the checks below are necessary and sufficient.
template <CoefficientRing R>
std::vector<std::pair<std::string, Form<R>>> relaxed_closed_analysis(
    const Frame<R>& fr7, const Su3Structure<R>& s6, const Form<R>& H, int alpha_slot = 7) {
  const int n = fr7.dim();
  Form<R> alpha = Form<R>::monomial(n, MultiIndex::single(alpha_slot), R::one());
  Form<R> S = contract(alpha_slot, H);
  Form<R> Htilde = H - wedge(S, alpha);
  Form<R> w = embed(s6.omega, n), pp = embed(s6.psi_plus, n);
  GenG2Pair<R> pair = build_structure_forms<R>(s6, Rational(0), Rational(1), alpha_slot);
  std::vector<std::pair<std::string, Form<R>>> out;
  out.emplace_back("d-H", fr7.d(H));
  out.emplace_back("dH-rho", fr7.d_twisted(H, pair.even));
  out.emplace_back("d-omega", fr7.d(w));
  out.emplace_back("d-psi-plus+S-omega", fr7.d(pp) + wedge(S, w));
  out.emplace_back("Htilde-psi-plus", wedge(Htilde, pp));
  out.emplace_back("Htilde-omega", wedge(Htilde, w));
  out.emplace_back("d-S", fr7.d(S));
  out.emplace_back("d-Htilde", fr7.d(Htilde));
  return out;
}

}  // namespace g2lab
