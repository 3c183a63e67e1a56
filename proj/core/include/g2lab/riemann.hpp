#pragma once

#include <vector>

#include "g2lab/form.hpp"
#include "g2lab/frame.hpp"

namespace g2lab {

// Levi-Civita data of an orthonormal coframe. Conventions, with
// [e_i, e_j] = sum_k c[i][j][k] e_k and Gamma[i][j][k] = <D_{e_i} e_j, e_k>:
//   2 Gamma[i][j][k] = c[i][j][k] - c[j][k][i] + c[k][i][j]
//   R(X, Y) = D_X D_Y - D_Y D_X - D_[X,Y]
//   ric[j][k] = sum_i <R(e_i, e_j) e_k, e_i>
// The bracket coefficients are read off the coframe differentials through
// d e^k (e_i, e_j) = -c[i][j][k].

template <typename R>
using Tensor3 = std::vector<std::vector<std::vector<R>>>;

template <typename R>
using Matrix = std::vector<std::vector<R>>;

template <typename R>
Tensor3<R> structure_constants(const Frame<R>& fr) {
  const int n = fr.dim();
  Tensor3<R> c(n + 1, Matrix<R>(n + 1, std::vector<R>(n + 1, R::zero())));
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) c[i][j][k] = -eval2(fr.d_of(k), i, j);
  return c;
}

template <typename R>
Tensor3<R> koszul_connection(const Frame<R>& fr) {
  if (!fr.orthonormal()) throw MetricError("connection needs an orthonormal coframe");
  const int n = fr.dim();
  Tensor3<R> c = structure_constants(fr);
  Tensor3<R> g(n + 1, Matrix<R>(n + 1, std::vector<R>(n + 1, R::zero())));
  const R half = R(Rational(1, 2));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) g[i][j][k] = half * (c[i][j][k] - c[j][k][i] + c[k][i][j]);
  return g;
}

// Curvature components by direct differentiation-free expansion; valid when
// the structure functions are constant, so frames carrying an interval slot
// are rejected (use the structure-equation route below for those).
template <typename R>
Matrix<R> ricci_tensor(const Frame<R>& fr) {
  if (fr.dt_index()) throw MetricError("ricci_tensor expects constant structure functions");
  const int n = fr.dim();
  Tensor3<R> c = structure_constants(fr);
  Tensor3<R> g = koszul_connection(fr);
  auto r_comp = [&](int i, int j, int k, int l) {
    R acc = R::zero();
    for (int m = 1; m <= n; ++m)
      acc = acc + g[j][k][m] * g[i][m][l] - g[i][k][m] * g[j][m][l] - c[i][j][m] * g[m][k][l];
    return acc;
  };
  Matrix<R> ric(n + 1, std::vector<R>(n + 1, R::zero()));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      R acc = R::zero();
      for (int i = 1; i <= n; ++i) acc = acc + r_comp(i, j, k, i);
      ric[j][k] = acc;
    }
  return ric;
}

template <typename R>
R scalar_curvature(const Matrix<R>& ric) {
  R acc = R::zero();
  for (std::size_t j = 1; j < ric.size(); ++j) acc = acc + ric[j][j];
  return acc;
}

// Connection one-forms theta[i][j] = sum_k Gamma[k][j][i] E^k, so that
// d E^i + theta[i][j] ^ E^j = 0 whenever the coframe is torsion-free.
template <typename R>
std::vector<std::vector<Form<R>>> connection_one_forms(const Frame<R>& fr) {
  const int n = fr.dim();
  Tensor3<R> g = koszul_connection(fr);
  std::vector<std::vector<Form<R>>> theta(n + 1, std::vector<Form<R>>(n + 1, Form<R>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        theta[i][j].add_term(MultiIndex::single(k), g[k][j][i]);
  return theta;
}

template <typename R>
std::vector<Form<R>> first_structure_residuals(const Frame<R>& fr,
                                               const std::vector<std::vector<Form<R>>>& theta) {
  const int n = fr.dim();
  std::vector<Form<R>> res;
  res.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Form<R> r = fr.d_of(i);
    for (int j = 1; j <= n; ++j)
      r = r + wedge(theta[i][j], Form<R>::monomial(n, MultiIndex::single(j), R::one()));
    res.push_back(r);
  }
  return res;
}

template <typename R>
std::vector<std::vector<Form<R>>> curvature_two_forms(
    const Frame<R>& fr, const std::vector<std::vector<Form<R>>>& theta) {
  const int n = fr.dim();
  std::vector<std::vector<Form<R>>> omega(n + 1, std::vector<Form<R>>(n + 1, Form<R>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Form<R> o = fr.d(theta[i][j]);
      for (int k = 1; k <= n; ++k) o = o + wedge(theta[i][k], theta[k][j]);
      omega[i][j] = o;
    }
  return omega;
}

// Contraction of the curvature two-forms back to the Ricci tensor; agrees
// with ricci_tensor on constant-coefficient frames.
template <typename R>
Matrix<R> ricci_from_curvature(const Frame<R>& fr,
                               const std::vector<std::vector<Form<R>>>& omega) {
  const int n = fr.dim();
  Matrix<R> ric(n + 1, std::vector<R>(n + 1, R::zero()));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      R acc = R::zero();
      for (int i = 1; i <= n; ++i) acc = acc + eval2(omega[i][k], i, j);
      ric[j][k] = acc;
    }
  return ric;
}

}  // namespace g2lab
