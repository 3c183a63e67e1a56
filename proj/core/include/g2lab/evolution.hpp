#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2lab/form.hpp"
#include "g2lab/frame.hpp"
#include "g2lab/ratfunc.hpp"
#include "g2lab/su3.hpp"

namespace g2lab {

// The rank-one nilmanifold coframe underlying the evolution example, with a
// single scale parameter a:
//   de1 =  a e46
//   de2 = -a/2 e36 - a/2 e45 + a/2 e17
//   de3 = -a/2 e15 + a/2 e26 - a/2 e47
//   de4 = -a e16
//   de5 =  a/2 e13 - a/2 e24 - a/2 e67
//   de6 =  a e14
//   de7 = -a/2 (e12 + e34 + e56)
template <typename R>
Frame<R> make_mbeta_frame(const R& a) {
  Frame<R> fr(7);
  auto mono = [](MultiIndex idx, const R& c) {
    Form<R> f(7);
    f.add_term(idx, c);
    return f;
  };
  auto ij = [](int i, int j) { return MultiIndex::from_indices({i, j}); };
  const R h = R(Rational(1, 2)) * a;
  fr.set_d(1, mono(ij(4, 6), a));
  fr.set_d(2, -(h * mono(ij(3, 6), R::one())) - h * mono(ij(4, 5), R::one()) +
                   h * mono(ij(1, 7), R::one()));
  fr.set_d(3, -(h * mono(ij(1, 5), R::one())) + h * mono(ij(2, 6), R::one()) -
                   h * mono(ij(4, 7), R::one()));
  fr.set_d(4, -(a * mono(ij(1, 6), R::one())));
  fr.set_d(5, h * mono(ij(1, 3), R::one()) - h * mono(ij(2, 4), R::one()) -
                   h * mono(ij(6, 7), R::one()));
  fr.set_d(6, a * mono(ij(1, 4), R::one()));
  fr.set_d(7, -(h * (mono(ij(1, 2), R::one()) + mono(ij(3, 4), R::one()) +
                     mono(ij(5, 6), R::one()))));
  return fr;
}

// One-parameter family of half-flat data on the coframe above:
//   omega = u v (e12 + e34 + e56)
//   psi+  = u v^2 (e135 - e236 - e245) - u^3 e146
//   psi-  = u^2 v (e136 + e145 - e246) + v^3 e235
//   eta   = v^-3 e7
// The evolution system couples these through the spatial differential.
struct EvolutionFamily {
  EvolutionFamily() : frame(7), forms(7) {}
  Frame<RatFunc> frame;
  Su3Structure<RatFunc> forms;
  RatFunc u, v;
};

Su3Structure<RatFunc> family_forms(const RatFunc& u, const RatFunc& v);
EvolutionFamily make_mbeta_family(const Rational& a, const RatFunc& u, const RatFunc& v);

// The flow equations, as residuals that vanish on solutions:
//   dt omega + d eta ; dt (psi+ ^ eta) - d psi- ; dt (psi- ^ eta) + d psi+
std::vector<std::pair<std::string, Form<RatFunc>>> evolution_residuals(
    const EvolutionFamily& fam);

// Closed-form solution through (u, v) = (1, 1).
RatFunc analytic_u(const Rational& a);
RatFunc analytic_v();

// Reduction of the flow to an ODE system in (u, v):
//   u' = a/4 (v^-4 + v^4)
//   v' = a/4 (1 / (u v^3) - v^5 / u)
std::pair<double, double> ode_rhs(double a, double u, double v);

struct EvolutionRow {
  double t, u, v;
};

struct IntegrationResult {
  std::vector<EvolutionRow> rows;
  bool analytic_valid = false;  // initial data (1, 1)
  double max_err_u = 0.0, max_err_v = 0.0;
};

IntegrationResult integrate_rk4(double a, double u0, double v0, double t_end, double step);
void write_csv(const std::string& path, const IntegrationResult& res, double a);

// Interval extension of the coframe with the scales of the limiting flat
// metric: slots {1, 4, 6} carry 1 + a t / 2, the rest stay unit, and the
// closing slot 8 is dt.
Frame<RatFunc> scaled_interval_frame(const Rational& a);

// Interval extension with unit scales (the bare cylinder), slot 8 = dt.
Frame<RatFunc> mbeta_interval_frame(const Rational& a);

}  // namespace g2lab
