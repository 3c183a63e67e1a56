#include "g2lab/evolution.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "g2lab/errors.hpp"

namespace g2lab {

namespace {

Form<RatFunc> mono7(std::initializer_list<int> idx, const RatFunc& c) {
  Form<RatFunc> f(7);
  f.add_term(MultiIndex::from_indices(idx), c);
  return f;
}

}  // namespace

Su3Structure<RatFunc> family_forms(const RatFunc& u, const RatFunc& v) {
  if (u.is_zero() || v.is_zero()) throw Error("family scales must be invertible");
  Su3Structure<RatFunc> s(7);
  RatFunc uv = u * v, uv2 = u * v * v, u2v = u * u * v;
  RatFunc u3 = u * u * u, v3 = v * v * v;
  s.omega = mono7({1, 2}, uv) + mono7({3, 4}, uv) + mono7({5, 6}, uv);
  s.psi_plus = mono7({1, 3, 5}, uv2) - mono7({2, 3, 6}, uv2) - mono7({2, 4, 5}, uv2) -
               mono7({1, 4, 6}, u3);
  s.psi_minus = mono7({1, 3, 6}, u2v) + mono7({1, 4, 5}, u2v) - mono7({2, 4, 6}, u2v) +
                mono7({2, 3, 5}, v3);
  s.eta = mono7({7}, v3.inverse());
  return s;
}

EvolutionFamily make_mbeta_family(const Rational& a, const RatFunc& u, const RatFunc& v) {
  EvolutionFamily fam;
  fam.frame = make_mbeta_frame<RatFunc>(RatFunc(a));
  fam.forms = family_forms(u, v);
  fam.u = u;
  fam.v = v;
  return fam;
}

namespace {

Form<RatFunc> time_derivative(const Form<RatFunc>& f) {
  return f.map_coefficients<RatFunc>([](const RatFunc& c) { return c.derivative(); });
}

}  // namespace

std::vector<std::pair<std::string, Form<RatFunc>>> evolution_residuals(
    const EvolutionFamily& fam) {
  const auto& fr = fam.frame;
  const auto& s = fam.forms;
  if (!s.eta) throw Error("evolution family needs eta");
  Form<RatFunc> pp_eta = wedge(s.psi_plus, *s.eta);
  Form<RatFunc> pm_eta = wedge(s.psi_minus, *s.eta);
  std::vector<std::pair<std::string, Form<RatFunc>>> out;
  out.emplace_back("flow-omega", time_derivative(s.omega) + fr.d(*s.eta));
  out.emplace_back("flow-psi-plus", time_derivative(pp_eta) - fr.d(s.psi_minus));
  out.emplace_back("flow-psi-minus", time_derivative(pm_eta) + fr.d(s.psi_plus));
  return out;
}

RatFunc analytic_u(const Rational& a) {
  return RatFunc(Rational::one()) + RatFunc(a * Rational(1, 2)) * RatFunc::variable("t");
}

RatFunc analytic_v() { return RatFunc(Rational::one()); }

std::pair<double, double> ode_rhs(double a, double u, double v) {
  double v3 = v * v * v, v4 = v3 * v, v5 = v4 * v;
  double du = 0.25 * a * (1.0 / v4 + v4);
  double dv = 0.25 * a * (1.0 / (u * v3) - v5 / u);
  return {du, dv};
}

IntegrationResult integrate_rk4(double a, double u0, double v0, double t_end, double step) {
  if (step <= 0.0 || t_end < 0.0) throw Error("integration needs step > 0 and t_end >= 0");
  IntegrationResult res;
  res.analytic_valid = (u0 == 1.0 && v0 == 1.0);
  double t = 0.0, u = u0, v = v0;
  auto push = [&](double tt, double uu, double vv) {
    res.rows.push_back({tt, uu, vv});
    if (res.analytic_valid) {
      double ue = 1.0 + 0.5 * a * tt;
      double eu = std::fabs(uu - ue), ev = std::fabs(vv - 1.0);
      if (eu > res.max_err_u) res.max_err_u = eu;
      if (ev > res.max_err_v) res.max_err_v = ev;
    }
  };
  push(t, u, v);
  while (t < t_end - 1e-15) {
    double h = step;
    if (t + h > t_end) h = t_end - t;
    auto [k1u, k1v] = ode_rhs(a, u, v);
    auto [k2u, k2v] = ode_rhs(a, u + 0.5 * h * k1u, v + 0.5 * h * k1v);
    auto [k3u, k3v] = ode_rhs(a, u + 0.5 * h * k2u, v + 0.5 * h * k2v);
    auto [k4u, k4v] = ode_rhs(a, u + h * k3u, v + h * k3v);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    t += h;
    push(t, u, v);
  }
  return res;
}

void write_csv(const std::string& path, const IntegrationResult& res, double a) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open csv output: " + path);
  if (res.analytic_valid) {
    os << "t,u,v,u_exact,v_exact,err_u,err_v\n";
    char buf[256];
    for (const auto& r : res.rows) {
      double ue = 1.0 + 0.5 * a * r.t;
      std::snprintf(buf, sizeof buf, "%.12g,%.17g,%.17g,%.17g,%.17g,%.3e,%.3e\n", r.t, r.u,
                    r.v, ue, 1.0, std::fabs(r.u - ue), std::fabs(r.v - 1.0));
      os << buf;
    }
  } else {
    os << "t,u,v\n";
    char buf[128];
    for (const auto& r : res.rows) {
      std::snprintf(buf, sizeof buf, "%.12g,%.17g,%.17g\n", r.t, r.u, r.v);
      os << buf;
    }
  }
}

Frame<RatFunc> scaled_interval_frame(const Rational& a) {
  Frame<Rational> base = make_mbeta_frame<Rational>(a);
  RatFunc scale = analytic_u(a);
  std::vector<RatFunc> scales(7, RatFunc::one());
  for (int i : {1, 4, 6}) scales[static_cast<std::size_t>(i - 1)] = scale;
  return extend_interval(base, scales);
}

Frame<RatFunc> mbeta_interval_frame(const Rational& a) {
  Frame<Rational> base = make_mbeta_frame<Rational>(a);
  std::vector<RatFunc> scales(7, RatFunc::one());
  return extend_interval(base, scales);
}

}  // namespace g2lab
