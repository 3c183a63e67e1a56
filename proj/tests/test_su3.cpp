#include <doctest.h>

#include "g2lab/errors.hpp"
#include "g2lab/evolution.hpp"
#include "g2lab/parse.hpp"
#include "g2lab/registry.hpp"
#include "g2lab/su3.hpp"

using namespace g2lab;

namespace {

Form<Rational> mono(int n, std::initializer_list<int> idx, long c = 1) {
  return Form<Rational>::monomial(n, MultiIndex::from_indices(idx), Rational(c));
}

Frame<Rational> fixture_frame(const char* id) {
  const Fixture& fx = fixture(id);
  return bind_params(parse_frame(fx.frame), fx.defaults);
}

Su3Structure<Rational> fixture_su3(const char* id) {
  const Fixture& fx = fixture(id);
  Su3Structure<Rational> s(6);
  s.omega = bind_params(parse_form(fx.forms.at("omega"), 6), fx.defaults);
  s.psi_plus = bind_params(parse_form(fx.forms.at("psi-plus"), 6), fx.defaults);
  s.psi_minus = bind_params(parse_form(fx.forms.at("psi-minus"), 6), fx.defaults);
  return s;
}

}  // namespace

TEST_CASE("standard structure is compatible and nondegenerate") {
  Su3Structure<Rational> s = standard_su3(6);
  for (const auto& [name, r] : su3_compatibility_residuals(s)) {
    INFO(name);
    CHECK(r.is_zero());
  }
  CHECK(su3_nondegenerate(s));
  Su3Structure<Rational> s7 = standard_su3(7);
  CHECK(s7.eta.has_value());
  CHECK(*s7.eta == mono(7, {7}));
  CHECK(su3_nondegenerate(s7));
  CHECK_THROWS_AS(standard_su3(5), DimensionError);
}

TEST_CASE("complex structure sends e1 to -e2 and squares to minus one") {
  Su3Structure<Rational> s = standard_su3(6);
  auto A = complex_structure_matrix(s);
  CHECK(apply_J(A, mono(6, {1})) == -mono(6, {2}));
  CHECK(apply_J(A, mono(6, {2})) == mono(6, {1}));
  CHECK(apply_J(A, mono(6, {3})) == -mono(6, {4}));
  CHECK(apply_J(A, mono(6, {5})) == -mono(6, {6}));
  for (int i = 1; i <= 6; ++i) {
    Form<Rational> e = mono(6, {i});
    CHECK(apply_J(A, apply_J(A, e)) == -e);
  }
  // J preserves omega and fixes psi_+ only up to the phase rotation
  CHECK(apply_J(A, s.omega) == s.omega);
  CHECK(apply_J(A, wedge(s.omega, s.omega)) == wedge(s.omega, s.omega));
  // a non-integrable omega fails the square condition
  CHECK_THROWS_AS(complex_structure_matrix(fixture_su3("dbt-family")), MetricError);
}

TEST_CASE("torsion spaces have the right dimensions and wedge conditions") {
  Su3Structure<Rational> s = standard_su3(6);
  auto w2 = w2_space_basis(s);
  auto w3 = w3_space_basis(s);
  CHECK(w2.size() == 8);
  CHECK(w3.size() == 12);
  Form<Rational> omega2 = wedge(s.omega, s.omega);
  for (const auto& g : w2) {
    CHECK(wedge(g, s.psi_plus).is_zero());
    CHECK(wedge(g, s.psi_minus).is_zero());
    CHECK(wedge(g, omega2).is_zero());
  }
  for (const auto& g : w3) {
    CHECK(wedge(g, s.omega).is_zero());
    CHECK(wedge(g, s.psi_plus).is_zero());
    CHECK(wedge(g, s.psi_minus).is_zero());
  }
}

TEST_CASE("torsion decomposition reconstructs the derivatives") {
  Su3Structure<Rational> s = standard_su3(6);
  for (const char* id : {"torus6", "nil-t2t4", "nil-t3t3", "example-0025"}) {
    Frame<Rational> fr = fixture_frame(id);
    for (TorsionConvention conv : {TorsionConvention::verbatim, TorsionConvention::via_psi_minus}) {
      TorsionComponents tc = torsion_decompose(fr, s, conv);
      for (const auto& [name, r] : torsion_reconstruction_residuals(fr, s, tc, conv)) {
        INFO(id << " " << name);
        CHECK(r.is_zero());
      }
    }
  }
  // on the torus everything vanishes
  TorsionComponents flat = torsion_decompose(Frame<Rational>(6), s);
  CHECK(flat.nu0.is_zero());
  CHECK(flat.alpha0.is_zero());
  CHECK(flat.nu1.is_zero());
  CHECK(flat.nu3.is_zero());
  CHECK(flat.pi1.is_zero());
  CHECK(flat.pi2.is_zero());
  CHECK(flat.sigma2.is_zero());
}

TEST_CASE("the two psi-minus conventions agree on the standard structure") {
  Su3Structure<Rational> s = standard_su3(6);
  auto A = complex_structure_matrix(s);
  // (J pi1) ^ psi_+ = pi1 ^ psi_- for every 1-form pi1
  for (int i = 1; i <= 6; ++i) {
    Form<Rational> pi1 = mono(6, {i});
    CHECK(wedge(apply_J(A, pi1), s.psi_plus) == wedge(pi1, s.psi_minus));
  }
  for (const char* id : {"nil-t2t4", "nil-t3t3"}) {
    Frame<Rational> fr = fixture_frame(id);
    TorsionComponents a = torsion_decompose(fr, s, TorsionConvention::verbatim);
    TorsionComponents b = torsion_decompose(fr, s, TorsionConvention::via_psi_minus);
    CHECK(a.nu0 == b.nu0);
    CHECK(a.alpha0 == b.alpha0);
    CHECK(a.nu1 == b.nu1);
    CHECK(a.nu3 == b.nu3);
    CHECK(a.pi1 == b.pi1);
    CHECK(a.pi2 == b.pi2);
    CHECK(a.sigma2 == b.sigma2);
  }
}

TEST_CASE("scalar curvature of the pure-pi2 class") {
  Form<Rational> pi2 = mono(6, {1, 4}, 3) - mono(6, {2, 5}, 4);
  CHECK(norm_sq(pi2) == Rational(25));
  CHECK(scalar_curvature_w2(pi2) == Rational(-25, 2));
}

TEST_CASE("class analysis over the stored six-slot examples") {
  Su3Structure<Rational> s = standard_su3(6);
  {
    auto res = analyze_w2plus(Frame<Rational>(6), s);
    CHECK(res.in_class);
    CHECK(res.obstruction.empty());
    CHECK(res.pi2.is_zero());
  }
  {
    auto res = analyze_w2plus(fixture_frame("nil-t2t4"), s);
    CHECK(!res.in_class);
    CHECK(res.obstruction == "d-omega");
  }
  {
    auto res = analyze_w2plus(fixture_frame("example-0025"), s);
    CHECK(!res.in_class);
    CHECK(res.obstruction == "d-psi-minus");
    CHECK(res.d_psi_minus == -mono(6, {1, 2, 3, 5}));
    CHECK(res.d_psi_plus == mono(6, {1, 2, 4, 5}));
  }
  {
    auto res = analyze_w2plus(fixture_frame("dbt-family"), fixture_su3("dbt-family"));
    CHECK(res.in_class);
    REQUIRE(res.have_pi2);
    // mu = 2: pi2 = 4 e25 - e34 - e16, mirroring omega's index pattern
    CHECK(res.pi2 == mono(6, {2, 5}, 4) - mono(6, {3, 4}) - mono(6, {1, 6}));
    // independent of the solver: pi2 ^ omega = -d(psi+) and pi2 is primitive
    Su3Structure<Rational> dbt = fixture_su3("dbt-family");
    Frame<Rational> dfr = fixture_frame("dbt-family");
    CHECK(wedge(res.pi2, dbt.omega) == -dfr.d(dbt.psi_plus));
    CHECK(wedge(res.pi2, wedge(dbt.omega, dbt.omega)).is_zero());
    CHECK(!dfr.d(res.pi2).is_zero());
  }
}

TEST_CASE("hypo conditions hold on the rank-one nilmanifold") {
  Frame<Rational> fr = make_mbeta_frame<Rational>(Rational(2));
  Su3Structure<Rational> s7 = standard_su3(7);
  for (const auto& [name, r] : hypo_residuals(fr, s7)) {
    INFO(name);
    CHECK(r.is_zero());
  }
  Su3Structure<Rational> no_eta = standard_su3(6);
  CHECK_THROWS_AS(hypo_residuals(Frame<Rational>(6), no_eta), Error);
}

TEST_CASE("product lift doubles the structure") {
  Su3Structure<Rational> s7 = standard_su3(7);
  Su4Lift<Rational> lift = lift_su4(s7, 8);
  CHECK(lift.omega == mono(8, {1, 2}) + mono(8, {3, 4}) + mono(8, {5, 6}) + mono(8, {7, 8}));
  CHECK(lift.psi_plus.coeff(MultiIndex::from_indices({1, 3, 5, 7})) == Rational(1));
  CHECK(lift.psi_plus.coeff(MultiIndex::from_indices({1, 3, 6, 8})) == Rational(-1));
  // omega~^4 / 4! equals the product volume
  Form<Rational> o2 = wedge(lift.omega, lift.omega);
  Form<Rational> o4 = wedge(o2, o2);
  CHECK(o4 == mono(8, {1, 2, 3, 4, 5, 6, 7, 8}, 24));
  CHECK_THROWS_AS(lift_su4(s7, 7), DimensionError);
  CHECK_THROWS_AS(lift_su4(standard_su3(6), 7), Error);
}

TEST_CASE("hypersurface induction, constant cross-product case") {
  const Fixture& fx = fixture("hypersurface-g2");
  Frame<Rational> fr7 = bind_params(parse_frame(fx.frame), {});
  Form<Rational> phi = bind_params(parse_form(fx.forms.at("phi"), 7), {});
  CHECK(contract(6, phi) == mono(7, {1, 4}) - mono(7, {2, 5}) + mono(7, {3, 7}));

  HypersurfaceResult res = induce_hypersurface(fr7, phi, 6);
  CHECK(res.dphi.is_zero());
  CHECK(res.frobenius.is_zero());
  CHECK(res.lie_derivative.is_zero());
  CHECK(res.su3.omega == mono(6, {1, 4}) - mono(6, {2, 5}) + mono(6, {3, 6}));
  for (const auto& [name, r] : su3_compatibility_residuals(res.su3)) {
    INFO(name);
    CHECK(r.is_zero());
  }
  CHECK(res.frame.check_d2());
  CHECK(res.frame.d_of(4) == -mono(6, {1, 3}));  // slot 4 stays below the normal

  // the normal slot must not appear in the other differentials
  Frame<Rational> bad(7);
  bad.set_d(1, mono(7, {2, 6}));
  CHECK_THROWS_AS(induce_hypersurface(bad, phi, 6), Error);
}

TEST_CASE("hypersurface induction, solvable case") {
  const Fixture& fx = fixture("nakamura");
  Frame<Rational> fr7 = bind_params(parse_frame(fx.frame), {});
  Form<Rational> phi = bind_params(parse_form(fx.forms.at("phi"), 7), {});
  CHECK(contract(7, phi) == mono(7, {1, 4}) + mono(7, {3, 5}) - mono(7, {2, 6}));

  HypersurfaceResult res = induce_hypersurface(fr7, phi, 7);
  CHECK(res.dphi.is_zero());
  CHECK(res.frobenius.is_zero());
  CHECK(res.lie_derivative.is_zero());
  for (const auto& [name, r] : su3_compatibility_residuals(res.su3)) {
    INFO(name);
    CHECK(r.is_zero());
  }
  CHECK(su3_nondegenerate(res.su3));
}
