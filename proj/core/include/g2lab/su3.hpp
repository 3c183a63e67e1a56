#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2lab/form.hpp"
#include "g2lab/frame.hpp"
#include "g2lab/linsolve.hpp"
#include "g2lab/rational.hpp"

namespace g2lab {

// SU(3)-structure data: the fundamental 2-form and the real and imaginary
// parts of the complex volume form, plus the contact 1-form eta when the
// structure lives on a 7-dimensional carrier.
template <CoefficientRing R>
struct Su3Structure {
  Form<R> omega, psi_plus, psi_minus;
  std::optional<Form<R>> eta;

  explicit Su3Structure(int n) : omega(n), psi_plus(n), psi_minus(n) {}
  Su3Structure(Form<R> w, Form<R> pp, Form<R> pm, std::optional<Form<R>> e = std::nullopt)
      : omega(std::move(w)),
        psi_plus(std::move(pp)),
        psi_minus(std::move(pm)),
        eta(std::move(e)) {}

  int dim() const { return omega.dim(); }
};

// Model forms: omega = e12 + e34 + e56 and psi from the complex volume form
// (e1+ie2)^(e3+ie4)^(e5+ie6); eta = e7 for the 7-dimensional carrier.
Su3Structure<Rational> standard_su3(int n = 6);

// omega ^ psi_pm and the normalization psi_+ ^ psi_- - (2/3) omega^3.
template <CoefficientRing R>
std::vector<std::pair<std::string, Form<R>>> su3_compatibility_residuals(
    const Su3Structure<R>& s) {
  std::vector<std::pair<std::string, Form<R>>> out;
  out.emplace_back("omega-wedge-psi-plus", wedge(s.omega, s.psi_plus));
  out.emplace_back("omega-wedge-psi-minus", wedge(s.omega, s.psi_minus));
  Form<R> omega3 = wedge(s.omega, wedge(s.omega, s.omega));
  out.emplace_back("normalization",
                   wedge(s.psi_plus, s.psi_minus) - R(Rational(2, 3)) * omega3);
  return out;
}

template <CoefficientRing R>
bool su3_nondegenerate(const Su3Structure<R>& s) {
  Form<R> omega3 = wedge(s.omega, wedge(s.omega, s.omega));
  if (omega3.is_zero()) return false;
  if (s.eta && wedge(*s.eta, omega3).is_zero()) return false;
  return true;
}

// A[i][j] = omega(e_i, e_j); throws MetricError unless A^2 = -I.
template <CoefficientRing R>
std::vector<std::vector<R>> complex_structure_matrix(const Su3Structure<R>& s);

// J on homogeneous p-forms via (J f)(X_1..X_p) = f(J X_1, .., J X_p).
template <CoefficientRing R>
Form<R> apply_J(const std::vector<std::vector<R>>& A, const Form<R>& f);

// Contact-type conditions on a 7-dimensional carrier:
// d(omega), d(psi_+ ^ eta), d(psi_- ^ eta).
template <CoefficientRing R>
std::vector<std::pair<std::string, Form<R>>> hypo_residuals(const Frame<R>& fr,
                                                            const Su3Structure<R>& s) {
  if (!s.eta) throw Error("hypo conditions need the contact form eta");
  std::vector<std::pair<std::string, Form<R>>> out;
  out.emplace_back("d-omega", fr.d(s.omega));
  out.emplace_back("d-psi-plus-eta", fr.d(wedge(s.psi_plus, *s.eta)));
  out.emplace_back("d-psi-minus-eta", fr.d(wedge(s.psi_minus, *s.eta)));
  return out;
}

// Product SU(4) data on the carrier extended by the interval slot:
//   omega~ = omega + eta ^ dt,  psi~ = psi ^ (eta + i dt).
template <CoefficientRing R>
struct Su4Lift {
  Form<R> omega, psi_plus, psi_minus;
};

template <CoefficientRing R>
Su4Lift<R> lift_su4(const Su3Structure<R>& s, int dt_slot) {
  if (!s.eta) throw Error("product lift needs the contact form eta");
  if (dt_slot != s.dim() + 1) throw DimensionError("interval slot must extend the carrier");
  int n = dt_slot;
  Form<R> dt = Form<R>::monomial(n, MultiIndex::single(dt_slot), R::one());
  Form<R> om = embed(s.omega, n), pp = embed(s.psi_plus, n), pm = embed(s.psi_minus, n),
          et = embed(*s.eta, n);
  return Su4Lift<R>{om + wedge(et, dt), wedge(pp, et) - wedge(pm, dt),
                    wedge(pm, et) + wedge(pp, dt)};
}

// The two ways of writing the psi_- derivative row: through J pi_1 ^ psi_+
// or the equivalent pi_1 ^ psi_-.
enum class TorsionConvention { verbatim, via_psi_minus };

// d(omega) = nu0 psi_+ + alpha0 psi_- + nu1 ^ omega + nu3
// d(psi_+) = 2/3 alpha0 omega^2 + pi1 ^ psi_+ - pi2 ^ omega
// d(psi_-) = -2/3 nu0 omega^2 + (J pi1) ^ psi_+ - sigma2 ^ omega
// with nu3 in the 12-dimensional and pi2, sigma2 in the 8-dimensional
// torsion spaces cut out by the wedge conditions below.
struct TorsionComponents {
  Rational nu0, alpha0;
  Form<Rational> nu1, nu3, pi1, pi2, sigma2;
};

TorsionComponents torsion_decompose(const Frame<Rational>& fr, const Su3Structure<Rational>& s,
                                    TorsionConvention conv = TorsionConvention::verbatim);

// Same solve with the derivatives supplied directly instead of read off a
// coframe table.
TorsionComponents torsion_solve(const Su3Structure<Rational>& s, const Form<Rational>& d_omega,
                                const Form<Rational>& d_psi_plus,
                                const Form<Rational>& d_psi_minus,
                                TorsionConvention conv = TorsionConvention::verbatim);

// Re-evaluates the three defining equations with the solved components; all
// residuals vanish when the decomposition is consistent.
std::vector<std::pair<std::string, Form<Rational>>> torsion_reconstruction_residuals(
    const Frame<Rational>& fr, const Su3Structure<Rational>& s, const TorsionComponents& tc,
    TorsionConvention conv = TorsionConvention::verbatim);

// {gamma in L2 : gamma^psi_+ = gamma^psi_- = 0, gamma^omega^2 = 0}, dim 8.
std::vector<Form<Rational>> w2_space_basis(const Su3Structure<Rational>& s);
// {gamma in L3 : gamma^omega = 0, gamma^psi_+ = gamma^psi_- = 0}, dim 12.
std::vector<Form<Rational>> w3_space_basis(const Su3Structure<Rational>& s);

// Sum of squared coefficients; the norm induced by the orthonormal coframe.
template <CoefficientRing R>
R norm_sq(const Form<R>& f) {
  R out = R::zero();
  for (const auto& [idx, c] : f.terms()) out = out + c * c;
  return out;
}

template <CoefficientRing R>
R scalar_curvature_w2(const Form<R>& pi2) {
  return -(R(Rational(1, 2)) * norm_sq(pi2));
}

// Class with d(omega) = d(psi_-) = 0 and d(psi_+) = -pi2 ^ omega; pi2 is
// recovered through the (invertible) wedge-with-omega map and then checked
// against the defining wedge conditions of its 8-dimensional space.
template <typename R>
struct W2PlusResult {
  explicit W2PlusResult(int n)
      : d_omega(n), d_psi_minus(n), d_psi_plus(n), pi2(n) {}
  bool in_class = false;
  std::string obstruction;  // empty, "d-omega", "d-psi-minus", "pi2-space"
  Form<R> d_omega, d_psi_minus, d_psi_plus;
  bool have_pi2 = false;
  Form<R> pi2;
};

template <typename R>
W2PlusResult<R> analyze_w2plus(const Frame<R>& fr, const Su3Structure<R>& s);

// Induced structure on the leaf of ker(e^k): omega = contraction of phi,
// psi_+ = contraction of *phi, psi_- = pullback of phi, then relabel the
// surviving slots order-preservingly onto 1..6.
struct HypersurfaceResult {
  Frame<Rational> frame;
  Su3Structure<Rational> su3;
  Form<Rational> dphi, frobenius, lie_derivative;  // witnesses on the carrier
};

HypersurfaceResult induce_hypersurface(const Frame<Rational>& fr7, const Form<Rational>& phi,
                                       int k);

// --- template definitions ---

template <CoefficientRing R>
std::vector<std::vector<R>> complex_structure_matrix(const Su3Structure<R>& s) {
  const int n = 6;
  if (s.dim() < n) throw DimensionError("complex structure needs a 6-dimensional carrier");
  std::vector<std::vector<R>> A(n, std::vector<R>(n, R::zero()));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) A[i - 1][j - 1] = eval2(s.omega, i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      R acc = R::zero();
      for (int k = 0; k < n; ++k) acc = acc + A[i][k] * A[k][j];
      R want = i == j ? -R::one() : R::zero();
      if (!(acc == want)) throw MetricError("omega does not square to an almost complex structure");
    }
  return A;
}

template <CoefficientRing R>
Form<R> apply_J(const std::vector<std::vector<R>>& A, const Form<R>& f) {
  if (!f.is_homogeneous()) throw Error("J acts on homogeneous forms");
  const int n = static_cast<int>(A.size());
  if (f.is_zero()) return f;
  int p = f.max_degree();
  if (p == 0) return f;
  Form<R> out(f.dim());
  for (const auto& idx : degree_indices(f.dim(), p)) {
    bool in_range = true;
    for (int i : idx.indices())
      if (i > n) in_range = false;
    if (!in_range) continue;
    std::vector<int> I = idx.indices();
    std::vector<int> J(static_cast<std::size_t>(p), 1);
    R acc = R::zero();
    for (;;) {
      R prod = R::one();
      for (int l = 0; l < p; ++l)
        prod = prod * A[static_cast<std::size_t>(I[static_cast<std::size_t>(l)] - 1)]
                       [static_cast<std::size_t>(J[static_cast<std::size_t>(l)] - 1)];
      if (!prod.is_zero()) acc = acc + prod * eval_indices(f, J);
      int l = p - 1;
      while (l >= 0 && J[static_cast<std::size_t>(l)] == n) {
        J[static_cast<std::size_t>(l)] = 1;
        --l;
      }
      if (l < 0) break;
      ++J[static_cast<std::size_t>(l)];
    }
    out.add_term(idx, acc);
  }
  return out;
}

template <typename R>
W2PlusResult<R> analyze_w2plus(const Frame<R>& fr, const Su3Structure<R>& s) {
  const int n = fr.dim();
  if (n != 6) throw DimensionError("class analysis runs on 6-dimensional carriers");
  W2PlusResult<R> res(n);
  res.d_omega = fr.d(s.omega);
  res.d_psi_minus = fr.d(s.psi_minus);
  res.d_psi_plus = fr.d(s.psi_plus);
  if (!res.d_omega.is_zero()) {
    res.obstruction = "d-omega";
    return res;
  }
  if (!res.d_psi_minus.is_zero()) {
    res.obstruction = "d-psi-minus";
    return res;
  }
  // Solve gamma ^ omega = -d(psi_+) over L2; the map is injective here.
  std::vector<MultiIndex> b2 = degree_indices(n, 2);
  std::vector<std::vector<R>> mat;
  std::vector<R> rhs = coordinates(-res.d_psi_plus, 4);
  std::vector<std::vector<R>> cols;
  cols.reserve(b2.size());
  for (const auto& idx : b2)
    cols.push_back(coordinates(wedge(Form<R>::monomial(n, idx, R::one()), s.omega), 4));
  std::size_t rows = rhs.size();
  mat.assign(rows, std::vector<R>(b2.size(), R::zero()));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) mat[r][c] = cols[c][r];
  auto sol = solve_linear(std::move(mat), std::move(rhs));
  if (!sol.feasible || !sol.nullspace.empty())
    throw SolveError("wedge-with-omega inversion degenerated");
  res.pi2 = from_coordinates(n, 2, sol.particular);
  res.have_pi2 = true;
  Form<R> omega2 = wedge(s.omega, s.omega);
  bool in_space = wedge(res.pi2, s.psi_plus).is_zero() &&
                  wedge(res.pi2, s.psi_minus).is_zero() &&
                  wedge(res.pi2, omega2).is_zero();
  if (!in_space) {
    res.obstruction = "pi2-space";
    return res;
  }
  res.in_class = true;
  return res;
}

}  // namespace g2lab
