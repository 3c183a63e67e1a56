#include "g2lab/su3.hpp"

#include <utility>

namespace g2lab {

namespace {

Form<Rational> mono(int n, std::initializer_list<int> idx, long c = 1) {
  return Form<Rational>::monomial(n, MultiIndex::from_indices(idx), Rational(c));
}

}  // namespace

Su3Structure<Rational> standard_su3(int n) {
  if (n != 6 && n != 7) throw DimensionError("standard structure lives on 6 or 7 slots");
  Su3Structure<Rational> s{Form<Rational>(n), Form<Rational>(n), Form<Rational>(n), std::nullopt};
  s.omega = mono(n, {1, 2}) + mono(n, {3, 4}) + mono(n, {5, 6});
  s.psi_plus = mono(n, {1, 3, 5}) - mono(n, {1, 4, 6}) - mono(n, {2, 3, 6}) - mono(n, {2, 4, 5});
  s.psi_minus = mono(n, {1, 3, 6}) + mono(n, {1, 4, 5}) + mono(n, {2, 3, 5}) - mono(n, {2, 4, 6});
  if (n == 7) s.eta = mono(n, {7});
  return s;
}

namespace {

// Columns are coordinate vectors of candidate p-forms; rows stack the wedge
// conditions gamma ^ w = 0. Nullspace vectors are returned as forms.
std::vector<Form<Rational>> wedge_kernel(int p, const std::vector<Form<Rational>>& conds,
                                         std::size_t expected_dim) {
  const int n = 6;
  std::vector<MultiIndex> basis = degree_indices(n, p);
  std::size_t rows = 0;
  for (const auto& w : conds) rows += degree_indices(n, p + w.max_degree()).size();
  std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    Form<Rational> gamma = Form<Rational>::monomial(n, basis[c], Rational::one());
    std::size_t r0 = 0;
    for (const auto& w : conds) {
      auto coords = coordinates(wedge(gamma, w), p + w.max_degree());
      for (std::size_t r = 0; r < coords.size(); ++r) mat[r0 + r][c] = coords[r];
      r0 += coords.size();
    }
  }
  std::vector<Rational> rhs(rows, Rational::zero());
  auto sol = solve_linear(std::move(mat), std::move(rhs));
  if (!sol.feasible || sol.nullspace.size() != expected_dim)
    throw SolveError("torsion space has unexpected dimension");
  std::vector<Form<Rational>> out;
  out.reserve(sol.nullspace.size());
  for (const auto& v : sol.nullspace) out.push_back(from_coordinates(n, p, v));
  return out;
}

}  // namespace

std::vector<Form<Rational>> w2_space_basis(const Su3Structure<Rational>& s) {
  return wedge_kernel(2, {s.psi_plus, s.psi_minus, wedge(s.omega, s.omega)}, 8);
}

std::vector<Form<Rational>> w3_space_basis(const Su3Structure<Rational>& s) {
  return wedge_kernel(3, {s.omega, s.psi_plus, s.psi_minus}, 12);
}

TorsionComponents torsion_decompose(const Frame<Rational>& fr, const Su3Structure<Rational>& s,
                                    TorsionConvention conv) {
  if (fr.dim() != 6) throw DimensionError("torsion decomposition runs on 6 slots");
  if (!fr.orthonormal()) throw MetricError("torsion decomposition needs an orthonormal frame");
  return torsion_solve(s, fr.d(s.omega), fr.d(s.psi_plus), fr.d(s.psi_minus), conv);
}

TorsionComponents torsion_solve(const Su3Structure<Rational>& s, const Form<Rational>& d_omega,
                                const Form<Rational>& d_psi_plus,
                                const Form<Rational>& d_psi_minus, TorsionConvention conv) {
  const int n = 6;
  if (s.dim() != n) throw DimensionError("torsion decomposition runs on 6 slots");
  auto A = complex_structure_matrix(s);

  std::vector<Form<Rational>> w2 = w2_space_basis(s);
  std::vector<Form<Rational>> w3 = w3_space_basis(s);
  Form<Rational> omega2 = wedge(s.omega, s.omega);

  // Unknowns: nu0, alpha0, nu1 (6), nu3 (12), pi1 (6), pi2 (8), sigma2 (8).
  const std::size_t cols = 2 + 6 + w3.size() + 6 + w2.size() + w2.size();
  const std::size_t rows3 = degree_indices(n, 3).size();
  const std::size_t rows4 = degree_indices(n, 4).size();
  const std::size_t rows = rows3 + 2 * rows4;

  std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(cols, Rational::zero()));
  auto put = [&](std::size_t col, const std::vector<Rational>& blockA,
                 const std::vector<Rational>& blockB, const std::vector<Rational>& blockC) {
    for (std::size_t r = 0; r < blockA.size(); ++r) mat[r][col] = blockA[r];
    for (std::size_t r = 0; r < blockB.size(); ++r) mat[rows3 + r][col] = blockB[r];
    for (std::size_t r = 0; r < blockC.size(); ++r) mat[rows3 + rows4 + r][col] = blockC[r];
  };
  std::vector<Rational> zero3(rows3, Rational::zero());
  std::vector<Rational> zero4(rows4, Rational::zero());

  std::size_t col = 0;
  put(col++, coordinates(s.psi_plus, 3), zero4,
      coordinates(Rational(-2, 3) * omega2, 4));  // nu0
  put(col++, coordinates(s.psi_minus, 3), coordinates(Rational(2, 3) * omega2, 4),
      zero4);  // alpha0
  for (int j = 1; j <= 6; ++j) {
    Form<Rational> ej = mono(n, {j});
    put(col++, coordinates(wedge(ej, s.omega), 3), zero4, zero4);  // nu1_j
  }
  for (const auto& b : w3) put(col++, coordinates(b, 3), zero4, zero4);  // nu3
  for (int j = 1; j <= 6; ++j) {
    Form<Rational> ej = mono(n, {j});
    Form<Rational> last(n);
    if (conv == TorsionConvention::verbatim) {
      Form<Rational> Jej(n);
      for (int i = 1; i <= 6; ++i)
        Jej += Form<Rational>::monomial(n, MultiIndex::single(i), A[i - 1][j - 1]);
      last = wedge(Jej, s.psi_plus);
    } else {
      last = wedge(ej, s.psi_minus);
    }
    put(col++, zero3, coordinates(wedge(ej, s.psi_plus), 4), coordinates(last, 4));  // pi1_j
  }
  for (const auto& b : w2)
    put(col++, zero3, coordinates(-wedge(b, s.omega), 4), zero4);  // pi2
  for (const auto& b : w2)
    put(col++, zero3, zero4, coordinates(-wedge(b, s.omega), 4));  // sigma2

  std::vector<Rational> rhs;
  rhs.reserve(rows);
  for (auto& c : coordinates(d_omega, 3)) rhs.push_back(std::move(c));
  for (auto& c : coordinates(d_psi_plus, 4)) rhs.push_back(std::move(c));
  for (auto& c : coordinates(d_psi_minus, 4)) rhs.push_back(std::move(c));

  auto sol = solve_linear(std::move(mat), std::move(rhs));
  if (!sol.feasible)
    throw SolveError("derivatives do not lie in the torsion image (row " +
                     std::to_string(sol.bad_row) + ")");
  if (!sol.nullspace.empty()) throw SolveError("torsion decomposition is not unique");

  const auto& x = sol.particular;
  TorsionComponents t{Rational::zero(), Rational::zero(), Form<Rational>(n), Form<Rational>(n),
                      Form<Rational>(n), Form<Rational>(n), Form<Rational>(n)};
  std::size_t k = 0;
  t.nu0 = x[k++];
  t.alpha0 = x[k++];
  for (int j = 1; j <= 6; ++j) t.nu1 += Form<Rational>::monomial(n, MultiIndex::single(j), x[k++]);
  for (const auto& b : w3) t.nu3 += x[k++] * b;
  for (int j = 1; j <= 6; ++j) t.pi1 += Form<Rational>::monomial(n, MultiIndex::single(j), x[k++]);
  for (const auto& b : w2) t.pi2 += x[k++] * b;
  for (const auto& b : w2) t.sigma2 += x[k++] * b;
  return t;
}

std::vector<std::pair<std::string, Form<Rational>>> torsion_reconstruction_residuals(
    const Frame<Rational>& fr, const Su3Structure<Rational>& s, const TorsionComponents& tc,
    TorsionConvention conv) {
  Form<Rational> omega2 = wedge(s.omega, s.omega);
  std::vector<std::pair<std::string, Form<Rational>>> out;
  out.emplace_back("d-omega", fr.d(s.omega) - (tc.nu0 * s.psi_plus + tc.alpha0 * s.psi_minus +
                                               wedge(tc.nu1, s.omega) + tc.nu3));
  out.emplace_back("d-psi-plus",
                   fr.d(s.psi_plus) - (Rational(2, 3) * tc.alpha0 * omega2 +
                                       wedge(tc.pi1, s.psi_plus) - wedge(tc.pi2, s.omega)));
  Form<Rational> third = conv == TorsionConvention::verbatim
                             ? wedge(apply_J(complex_structure_matrix(s), tc.pi1), s.psi_plus)
                             : wedge(tc.pi1, s.psi_minus);
  out.emplace_back("d-psi-minus",
                   fr.d(s.psi_minus) - (Rational(-2, 3) * tc.nu0 * omega2 + third -
                                        wedge(tc.sigma2, s.omega)));
  return out;
}

HypersurfaceResult induce_hypersurface(const Frame<Rational>& fr7, const Form<Rational>& phi,
                                       int k) {
  const int n = fr7.dim();
  if (n != 7) throw DimensionError("hypersurface induction runs on 7 slots");
  if (k < 1 || k > 7) throw IndexError("normal slot out of range");
  if (!fr7.orthonormal()) throw MetricError("hypersurface induction needs an orthonormal frame");

  for (int i = 1; i <= n; ++i) {
    if (i == k) continue;
    for (const auto& [idx, c] : fr7.d_of(i).terms())
      if (idx.contains(k))
        throw Error("frame does not descend: d(e" + std::to_string(i) + ") involves the normal");
  }

  Form<Rational> ek = mono(n, {k});
  Form<Rational> dphi = fr7.d(phi);
  Form<Rational> frob = wedge(fr7.d_of(k), ek);
  Form<Rational> lie = contract(k, dphi) + fr7.d(contract(k, phi));

  // The three-form carries its own orientation: (X -| phi)^2 ^ phi equals
  // 6 g(X,X) vol_phi with g definite, so the sign of the top coefficient
  // decides which star the induction must use.
  Rational orient = Rational::zero();
  const MultiIndex top = MultiIndex::full(n);
  for (int i = 1; i <= n && orient.is_zero(); ++i) {
    Form<Rational> ix = contract(i, phi);
    orient = wedge(wedge(ix, ix), phi).coeff(top);
  }
  if (orient.is_zero()) throw Error("three-form is degenerate: no induced orientation");

  Form<Rational> omega7 = contract(k, phi);
  Form<Rational> psi_plus7 = contract(k, fr7.hodge_star(phi));
  if (orient.sign() < 0) psi_plus7 = -psi_plus7;
  Form<Rational> psi_minus7(n);
  for (const auto& [idx, c] : phi.terms())
    if (!idx.contains(k)) psi_minus7.add_term(idx, c);

  auto relabel = [&](const Form<Rational>& f) {
    Form<Rational> out(6);
    for (const auto& [idx, c] : f.terms()) {
      if (idx.contains(k)) throw Error("form does not descend to the leaf");
      std::vector<int> iv;
      for (int i : idx.indices()) iv.push_back(i > k ? i - 1 : i);
      out.add_term(MultiIndex::from_indices(iv), c);
    }
    return out;
  };

  HypersurfaceResult res{Frame<Rational>(6),
                         Su3Structure<Rational>{Form<Rational>(6), Form<Rational>(6),
                                                Form<Rational>(6), std::nullopt},
                         dphi, frob, lie};
  for (int i = 1; i <= n; ++i) {
    if (i == k) continue;
    int target = i > k ? i - 1 : i;
    res.frame.set_d(target, relabel(fr7.d_of(i)));
  }
  res.su3.omega = relabel(omega7);
  res.su3.psi_plus = relabel(psi_plus7);
  res.su3.psi_minus = relabel(psi_minus7);
  return res;
}

}  // namespace g2lab
