#pragma once

#include <utility>
#include <vector>

#include "g2lab/errors.hpp"

namespace g2lab {

template <typename F>
struct LinearSolution {
  bool feasible = false;
  long bad_row = -1;  // original index of the first inconsistent row
  int rank = 0;
  std::vector<int> pivot_cols;
  std::vector<F> particular;              // free variables set to zero
  std::vector<std::vector<F>> nullspace;  // basis of the homogeneous solutions
};

// Exact Gauss-Jordan over any field with is_zero/inverse. Row order of the
// input is remembered so an inconsistency can be reported against it.
template <typename F>
LinearSolution<F> solve_linear(std::vector<std::vector<F>> a, std::vector<F> b,
                               int cols = -1) {
  const std::size_t m = a.size();
  if (b.size() != m) throw SolveError("matrix and right-hand side disagree in rows");
  std::size_t n;
  if (cols >= 0)
    n = static_cast<std::size_t>(cols);
  else if (m > 0)
    n = a[0].size();
  else
    throw SolveError("empty system needs an explicit column count");
  for (const auto& row : a)
    if (row.size() != n) throw SolveError("ragged matrix row");

  std::vector<long> origin(m);
  for (std::size_t i = 0; i < m; ++i) origin[i] = static_cast<long>(i);

  LinearSolution<F> sol;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i)
      if (!a[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    std::swap(a[r], a[piv]);
    std::swap(b[r], b[piv]);
    std::swap(origin[r], origin[piv]);
    F inv = a[r][col].inverse();
    for (std::size_t j = col; j < n; ++j) a[r][j] = inv * a[r][j];
    b[r] = inv * b[r];
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      F f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[r][j];
      b[i] = b[i] - f * b[r];
    }
    sol.pivot_cols.push_back(static_cast<int>(col));
    ++r;
  }
  sol.rank = static_cast<int>(r);

  for (std::size_t i = r; i < m; ++i)
    if (!b[i].is_zero()) {
      sol.feasible = false;
      sol.bad_row = origin[i];
      return sol;
    }

  sol.feasible = true;
  sol.particular.assign(n, F::zero());
  for (std::size_t j = 0; j < r; ++j)
    sol.particular[static_cast<std::size_t>(sol.pivot_cols[j])] = b[j];

  std::vector<bool> is_pivot(n, false);
  for (int c : sol.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(n, F::zero());
    v[f] = F::one();
    for (std::size_t j = 0; j < r; ++j)
      v[static_cast<std::size_t>(sol.pivot_cols[j])] = -a[j][f];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace g2lab
