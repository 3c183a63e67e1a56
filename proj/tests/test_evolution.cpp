#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "g2lab/evolution.hpp"
#include "g2lab/riemann.hpp"

using namespace g2lab;

TEST_CASE("ode right-hand side spot values") {
  auto [du, dv] = ode_rhs(4.0, 1.0, 2.0);
  // all quantities are dyadic, so the doubles are exact
  CHECK(du == 16.0625);
  CHECK(dv == -31.875);

  auto [du1, dv1] = ode_rhs(2.0, 1.0, 1.0);
  CHECK(du1 == 1.0);
  CHECK(dv1 == 0.0);
}

TEST_CASE("integrator is fourth order") {
  // Richardson ratios from generic initial data: halving the step must cut
  // the global error by about 2^4. Run to t = 1 so the transient has been
  // crossed; measured ratios are 13.7 (u) and 17.7 (v).
  const double a = 2.0, tEnd = 1.0;
  IntegrationResult r1 = integrate_rk4(a, 1.0, 2.0, tEnd, 0.05);
  IntegrationResult r2 = integrate_rk4(a, 1.0, 2.0, tEnd, 0.025);
  IntegrationResult r4 = integrate_rk4(a, 1.0, 2.0, tEnd, 0.0125);
  CHECK(!r1.analytic_valid);
  double du1 = std::fabs(r1.rows.back().u - r2.rows.back().u);
  double du2 = std::fabs(r2.rows.back().u - r4.rows.back().u);
  double dv1 = std::fabs(r1.rows.back().v - r2.rows.back().v);
  double dv2 = std::fabs(r2.rows.back().v - r4.rows.back().v);
  REQUIRE(du2 > 1e-14);
  REQUIRE(dv2 > 1e-14);
  CHECK(du1 / du2 > 12.0);
  CHECK(du1 / du2 < 20.0);
  CHECK(dv1 / dv2 > 12.0);
  CHECK(dv1 / dv2 < 20.0);
}

TEST_CASE("integrator tracks the closed-form solution") {
  IntegrationResult res = integrate_rk4(2.0, 1.0, 1.0, 1.0, 1e-3);
  CHECK(res.analytic_valid);
  CHECK(res.max_err_u <= 1e-8);
  CHECK(res.max_err_v <= 1e-10);
  CHECK(res.rows.size() == 1001);
  CHECK(res.rows.back().t == doctest::Approx(1.0));

  IntegrationResult off = integrate_rk4(2.0, 1.0, 2.0, 0.5, 1e-2);
  CHECK(!off.analytic_valid);
  CHECK(off.max_err_u == 0.0);

  CHECK_THROWS_AS((void)integrate_rk4(2.0, 1.0, 1.0, 1.0, 0.0), Error);
  CHECK_THROWS_AS((void)integrate_rk4(2.0, 1.0, 1.0, -1.0, 1e-3), Error);
}

TEST_CASE("flow residuals vanish on the closed-form family") {
  for (Rational a : {Rational(2), Rational(5, 3)}) {
    EvolutionFamily fam = make_mbeta_family(a, analytic_u(a), analytic_v());
    auto res = evolution_residuals(fam);
    REQUIRE(res.size() == 3);
    CHECK(res[0].first == "flow-omega");
    CHECK(res[1].first == "flow-psi-plus");
    CHECK(res[2].first == "flow-psi-minus");
    for (const auto& [name, r] : res) {
      INFO(name);
      CHECK(r.is_zero());
    }
  }
}

TEST_CASE("flow residuals detect a non-solution") {
  // freezing the scales leaves d eta unbalanced
  EvolutionFamily fam = make_mbeta_family(Rational(2), RatFunc::one(), RatFunc::one());
  auto res = evolution_residuals(fam);
  CHECK(!res[0].second.is_zero());
}

TEST_CASE("family scales must be invertible") {
  CHECK_THROWS_AS((void)family_forms(RatFunc::zero(), RatFunc::one()), Error);
  CHECK_THROWS_AS((void)family_forms(RatFunc::one(), RatFunc::zero()), Error);
}

TEST_CASE("interval frames close up") {
  Frame<RatFunc> flat = scaled_interval_frame(Rational(2));
  CHECK(flat.dim() == 8);
  REQUIRE(flat.dt_index());
  CHECK(*flat.dt_index() == 8);
  CHECK(flat.check_d2());

  Frame<RatFunc> cyl = mbeta_interval_frame(Rational(2));
  CHECK(cyl.dim() == 8);
  CHECK(cyl.check_d2());
}

TEST_CASE("the scaled interval frame is flat") {
  Frame<RatFunc> fr = scaled_interval_frame(Rational(2));
  auto theta = connection_one_forms(fr);
  for (const Form<RatFunc>& r : first_structure_residuals(fr, theta)) CHECK(r.is_zero());
  auto omega = curvature_two_forms(fr, theta);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      INFO("Omega[" << i << "][" << j << "]");
      CHECK(omega[i][j].is_zero());
    }
}

TEST_CASE("csv export") {
  const std::string path = "evolution_smoke.csv";
  IntegrationResult res = integrate_rk4(2.0, 1.0, 1.0, 0.01, 1e-3);
  write_csv(path, res, 2.0);
  std::ifstream is(path);
  REQUIRE(is.good());
  std::string header;
  std::getline(is, header);
  CHECK(header == "t,u,v,u_exact,v_exact,err_u,err_v");
  int lines = 0;
  for (std::string line; std::getline(is, line);)
    if (!line.empty()) ++lines;
  CHECK(lines == static_cast<int>(res.rows.size()));
  is.close();
  std::remove(path.c_str());

  IntegrationResult off = integrate_rk4(2.0, 1.0, 2.0, 0.01, 1e-3);
  write_csv(path, off, 2.0);
  std::ifstream is2(path);
  std::getline(is2, header);
  CHECK(header == "t,u,v");
  is2.close();
  std::remove(path.c_str());
}
