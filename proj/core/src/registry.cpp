#include "g2lab/registry.hpp"

#include <algorithm>

#include "g2lab/errors.hpp"
#include "g2lab/evolution.hpp"
#include "g2lab/geng2.hpp"
#include "g2lab/parse.hpp"
#include "g2lab/riemann.hpp"

namespace g2lab {

namespace {

const char* kStdOmega = "12 + 34 + 56";
const char* kStdPsiPlus = "135 - 146 - 236 - 245";
const char* kStdPsiMinus = "136 + 145 + 235 - 246";

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> v;

  {
    Fixture f;
    f.id = "m-beta";
    f.title = "rank-one nilmanifold with weakly integrable twisted structure";
    f.dim = 7;
    f.frame =
        "(a*46,"
        " -1/2*a*36 - 1/2*a*45 + 1/2*a*17,"
        " -1/2*a*15 + 1/2*a*26 - 1/2*a*47,"
        " -a*16,"
        " 1/2*a*13 - 1/2*a*24 - 1/2*a*67,"
        " a*14,"
        " -1/2*a*12 - 1/2*a*34 - 1/2*a*56)";
    f.forms["omega"] = kStdOmega;
    f.forms["psi-plus"] = kStdPsiPlus;
    f.forms["psi-minus"] = kStdPsiMinus;
    f.forms["eta"] = "7";
    f.forms["h"] = "-a*146";
    f.forms["rho"] = "7 - 136 - 145 - 235 + 246 - 12347 - 12567 - 34567";
    f.forms["rho-hat"] = "12 + 34 + 56 + 1357 - 1467 - 2367 - 2457 - 123456";
    f.defaults["a"] = Rational(2);
    v.push_back(std::move(f));
  }

  {
    Fixture f;
    f.id = "torus6";
    f.title = "flat six-torus with translation-invariant structure";
    f.frame = "(0, 0, 0, 0, 0, 0)";
    f.forms["omega"] = kStdOmega;
    f.forms["psi-plus"] = kStdPsiPlus;
    f.forms["psi-minus"] = kStdPsiMinus;
    f.expected_in_class = true;
    v.push_back(std::move(f));
  }

  {
    Fixture f;
    f.id = "nil-t2t4";
    f.title = "nilmanifold (0,0,0,0,12,13); omega fails to close";
    f.frame = "(0, 0, 0, 0, 12, 13)";
    f.forms["omega"] = kStdOmega;
    f.forms["psi-plus"] = kStdPsiPlus;
    f.forms["psi-minus"] = kStdPsiMinus;
    f.expected_in_class = false;
    f.expected_obstruction = "d-omega";
    v.push_back(std::move(f));
  }

  {
    Fixture f;
    f.id = "nil-t3t3";
    f.title = "nilmanifold (0,0,0,12,13,23) with the standard forms";
    f.frame = "(0, 0, 0, 12, 13, 23)";
    f.forms["omega"] = kStdOmega;
    f.forms["psi-plus"] = kStdPsiPlus;
    f.forms["psi-minus"] = kStdPsiMinus;
    f.expected_in_class = false;
    f.expected_obstruction = "d-omega";
    v.push_back(std::move(f));
  }

  {
    Fixture f;
    f.id = "dbt-family";
    f.title = "one-parameter family on (0,0,0,12,13,23) with non-closed torsion";
    f.frame = "(0, 0, 0, 12, 13, 23)";
    f.forms["omega"] = "16 + mu*25 + mu*34 - 34";
    f.forms["psi-plus"] = "124 - mu*124 + mu*135 - mu^2*456 + mu*456 - 236";
    f.forms["psi-minus"] = "mu^2*145 - mu*145 + mu*246 - 246 + mu*356 + 123";
    // Unique solution of pi2 ^ omega = -d(psi+); its index pattern mirrors
    // omega's. It is primitive (pi2 ^ omega^2 = 0) and of type (1,1).
    f.forms["pi2"] = "mu^2*25 - mu^2*34 + 2*mu*34 - 34 - 16";
    f.defaults["mu"] = Rational(2);
    f.standard_metric = false;
    // psi+ ^ psi- = (1/3) omega^3 for this family: the printed pair carries
    // a non-unit psi scale, so the calibration check is off by design.
    f.normalized = false;
    f.expected_in_class = true;
    f.expect_dpi2_nonzero = true;
    v.push_back(std::move(f));
  }

  {
    Fixture f;
    f.id = "hypersurface-g2";
    f.title = "parallel cross-product structure on (0,0,0,-13,-23,0,0), slot 6 normal";
    f.dim = 7;
    f.frame = "(0, 0, 0, -13, -23, 0, 0)";
    f.forms["phi"] = "123 + 146 + 157 + 247 + 345 - 256 - 367";
    f.normal_slot = 6;
    f.expected_in_class = true;
    v.push_back(std::move(f));
  }

  {
    Fixture f;
    f.id = "nakamura";
    f.title = "complex-parallelizable solvmanifold, slot 7 normal";
    f.dim = 7;
    f.frame = "(0, 12 - 45, -13 + 46, 0, 15 - 24, -16 + 34, 0)";
    f.forms["phi"] = "147 + 357 - 267 + 136 + 125 + 234 - 456";
    f.normal_slot = 7;
    f.expected_in_class = true;
    v.push_back(std::move(f));
  }

  {
    Fixture f;
    f.id = "hyperkahler-t2";
    f.title = "product of a flat hyperkahler block with a two-torus";
    f.frame = "(0, 0, 0, 0, 0, 0)";
    f.forms["omega"] = "12 + 34 + 56";
    f.forms["psi-plus"] = "135 - 245 - 146 - 236";
    f.forms["psi-minus"] = "136 - 246 + 145 + 235";
    f.expected_in_class = true;
    v.push_back(std::move(f));
  }

  {
    Fixture f;
    f.id = "example-0025";
    f.title = "nilmanifold (0,0,0,0,0,25): even form closes under an eight-parameter twist";
    f.frame = "(0, 0, 0, 0, 0, 25)";
    f.forms["omega"] = kStdOmega;
    f.forms["psi-plus"] = kStdPsiPlus;
    f.forms["psi-minus"] = kStdPsiMinus;
    f.forms["h"] =
        "-457 + a1*124 - a1*456 + a2*125 - a2*345 - a3*134 + a3*156 + a4*135"
        " + a5*145 - a5*235 + a6*145 + a6*246 + a7*234 - a7*256 + a8*245";
    for (int i = 1; i <= 8; ++i) f.defaults["a" + std::to_string(i)] = Rational(1);
    f.expected_in_class = false;
    f.expected_obstruction = "d-psi-minus";
    v.push_back(std::move(f));
  }

  return v;
}

std::map<std::string, Rational> merged_params(const Fixture& fx,
                                              const std::map<std::string, Rational>& overrides,
                                              bool strict) {
  std::map<std::string, Rational> p = fx.defaults;
  for (const auto& [k, val] : overrides) {
    if (p.find(k) == p.end()) {
      if (strict) throw Error("fixture " + fx.id + " has no parameter '" + k + "'");
      continue;
    }
    p[k] = val;
  }
  return p;
}

Form<Rational> bound_form(const std::string& text, int dim,
                          const std::map<std::string, Rational>& params) {
  return bind_params(parse_form(text, dim), params);
}

void check_true(VerificationReport& rep, const std::string& name, const std::string& anchor,
                bool pass, const std::string& witness) {
  Check c;
  c.name = name;
  c.anchor = anchor;
  c.pass = pass;
  c.residual = pass ? "0" : witness;
  rep.checks.push_back(std::move(c));
}

template <typename R>
void check_zero(VerificationReport& rep, const std::string& name, const std::string& anchor,
                const Form<R>& residual) {
  check_true(rep, name, anchor, residual.is_zero(),
             residual.is_zero() ? "0" : print_form(residual));
}

template <typename R>
void check_d2(VerificationReport& rep, const std::string& name, const Frame<R>& fr) {
  auto res = fr.d2_residuals();
  std::string witness;
  bool ok = true;
  for (std::size_t i = 0; i < res.size(); ++i)
    if (!res[i].is_zero()) {
      ok = false;
      witness = "slot " + std::to_string(i + 1) + ": " + print_form(res[i]);
      break;
    }
  check_true(rep, name, "structure-table", ok, witness);
}

Su3Structure<Rational> parse_su3_six(const Fixture& fx,
                                     const std::map<std::string, Rational>& params) {
  Su3Structure<Rational> s(6);
  s.omega = bound_form(fx.forms.at("omega"), 6, params);
  s.psi_plus = bound_form(fx.forms.at("psi-plus"), 6, params);
  s.psi_minus = bound_form(fx.forms.at("psi-minus"), 6, params);
  return s;
}

// Shared block for a six-slot structure; `prefix` distinguishes induced runs.
void sixdim_checks(VerificationReport& rep, const std::string& prefix,
                   const BoundStructure& bs, const Fixture& fx,
                   const std::map<std::string, Rational>& params) {
  check_d2(rep, prefix + "frame-d2", bs.frame);
  check_true(rep, prefix + "unimodular", "structure-table", bs.frame.is_unimodular(),
             "trace of some ad is nonzero");
  for (const auto& [name, r] : su3_compatibility_residuals(bs.su3)) {
    if (name == "normalization" && !bs.normalized) continue;
    check_zero(rep, prefix + "su3-" + name, "su3-compat", r);
  }
  check_true(rep, prefix + "su3-nondegenerate", "su3-compat", su3_nondegenerate(bs.su3),
             "omega^3 vanishes");

  StrongProductAnalysis<Rational> an = strong_product_analysis(bs.frame, bs.su3);
  bool member_ok = true;
  std::string member_witness;
  if (bs.expected_in_class) {
    member_ok = an.base.in_class == *bs.expected_in_class &&
                an.base.obstruction == bs.expected_obstruction;
    if (!member_ok)
      member_witness = "got " + std::string(an.base.in_class ? "in-class" : "obstruction: ") +
                       an.base.obstruction;
  }
  check_true(rep, prefix + "w2plus-membership", "w2plus", member_ok, member_witness);
  check_true(rep, prefix + "strong-biconditional", "strong-biconditional", an.biconditional_ok,
             an.base.in_class ? "class holds but no valid twist" : an.infeasible_at);

  if (an.base.in_class) {
    check_true(rep, prefix + "strong-h-from-pi2", "strong-biconditional", an.pi2_alpha_works,
               "pi2 ^ alpha fails the twisted closure");
    Form<Rational> dpi2 = bs.frame.d(an.base.pi2);
    check_true(rep, prefix + "pi2-closed-implies-zero", "pi2-identity",
               !dpi2.is_zero() || an.base.pi2.is_zero(),
               "closed nonzero pi2: " + print_form(an.base.pi2));
    if (fx.forms.count("pi2"))
      check_zero(rep, prefix + "pi2-expected", "w2plus",
                 an.base.pi2 - bound_form(fx.forms.at("pi2"), 6, params));
    if (fx.expect_dpi2_nonzero) {
      check_true(rep, prefix + "dpi2-nonzero", "w2plus", !dpi2.is_zero(), "d pi2 = 0");
      Frame<Rational> fr7 = extend_product_circle(bs.frame);
      check_true(rep, prefix + "dh-nonzero", "w2plus", !fr7.d(an.pi2_alpha).is_zero(),
                 "d(pi2 ^ alpha) = 0");
    }
    if (bs.standard_metric) {
      // The structure's own volume omega^3 / 6; the coframe orientation may
      // disagree with it, so the identity must not assume e^{1..6}.
      Form<Rational> vol =
          Rational(1, 6) * wedge(bs.su3.omega, wedge(bs.su3.omega, bs.su3.omega));
      check_zero(rep, prefix + "pi2-identity", "pi2-identity",
                 wedge(an.base.pi2, an.base.d_psi_plus) - norm_sq(an.base.pi2) * vol);
    }
  }

  if (fx.forms.count("h")) {
    Frame<Rational> fr7 = extend_product_circle(bs.frame);
    Form<Rational> H = bound_form(fx.forms.at("h"), 7, params);
    for (const auto& [name, r] : relaxed_closed_analysis(fr7, bs.su3, H))
      check_zero(rep, prefix + "relaxed-" + name, "relaxed-closed", r);
  }
}

void mbeta_checks(VerificationReport& rep, const Fixture& fx,
                  const std::map<std::string, Rational>& params) {
  Frame<Rational> fr = bind_params(parse_frame(fx.frame), params);
  const Rational a = params.at("a");

  Su3Structure<Rational> s6 = parse_su3_six(fx, params);
  Su3Structure<Rational> s7(7);
  s7.omega = embed(s6.omega, 7);
  s7.psi_plus = embed(s6.psi_plus, 7);
  s7.psi_minus = embed(s6.psi_minus, 7);
  s7.eta = bound_form(fx.forms.at("eta"), 7, params);

  check_d2(rep, "frame-d2", fr);
  check_true(rep, "unimodular", "structure-table", fr.is_unimodular(),
             "trace of some ad is nonzero");
  for (const auto& [name, r] : su3_compatibility_residuals(s6))
    check_zero(rep, "su3-" + name, "su3-compat", r);
  check_true(rep, "su3-nondegenerate", "su3-compat", su3_nondegenerate(s7),
             "degenerate omega or eta");

  GenG2Pair<Rational> pair = build_structure_forms<Rational>(s6, Rational(0), Rational(1), 7);
  const Form<Rational>& rho = pair.odd;
  const Form<Rational>& rho_hat = pair.even;
  check_zero(rep, "rho-printed", "normal-form", rho - bound_form(fx.forms.at("rho"), 7, params));
  check_zero(rep, "rho-hat-printed", "normal-form",
             rho_hat - bound_form(fx.forms.at("rho-hat"), 7, params));
  check_zero(rep, "companion-rho", "companion", fr.box_companion(rho) - rho_hat);
  check_zero(rep, "companion-involution", "companion",
             fr.box_companion(fr.box_companion(rho)) - rho);
  Rational q = fr.q_volume(rho);
  check_true(rep, "q-volume", "companion", q == Rational(8), "q(rho) = " + q.str());

  Form<Rational> H = bound_form(fx.forms.at("h"), 7, params);
  Rational lambda = -a * Rational(1, 2);
  check_zero(rep, "weak-integrability", "weak-integrability",
             weak_residual(fr, rho, rho_hat, H, lambda));
  for (const auto& [name, r] : weak_component_residuals(fr, s7, H, lambda))
    check_zero(rep, name, "weak-components", r);
  check_zero(rep, "coclosed-h", "coclosed-h", fr.d(fr.hodge_star(H)));
  for (const auto& [name, r] : hypo_residuals(fr, s7))
    check_zero(rep, "hypo-" + name, "hypo-system", r);

  Matrix<Rational> ric = ricci_tensor(fr);
  std::string witness;
  bool ric_ok = true;
  const Rational half_a2 = a * a * Rational(1, 2);
  for (int j = 1; j <= 7; ++j)
    for (int k = 1; k <= 7; ++k) {
      Rational want = (j == k && (j == 1 || j == 4 || j == 6)) ? half_a2 : Rational(0);
      if (!(ric[j][k] == want)) {
        ric_ok = false;
        if (!witness.empty()) witness += "; ";
        witness += "ric[" + std::to_string(j) + "][" + std::to_string(k) +
                   "] = " + ric[j][k].str() + " (want " + want.str() + ")";
      }
    }
  check_true(rep, "ricci-diagonal", "ricci", ric_ok, witness);

  AffineFormSet<Rational> sols = solve_weak_h(fr, rho, rho_hat, lambda);
  check_true(rep, "solve-weak-h", "weak-h-solver", sols.feasible && sols.contains(H),
             sols.feasible ? "printed twist is not in the solution set" : sols.bad_row_label);

  EvolutionFamily fam = make_mbeta_family(a, analytic_u(a), analytic_v());
  for (const auto& [name, r] : evolution_residuals(fam))
    check_zero(rep, name, "flow", r);

  Frame<RatFunc> fr8 = mbeta_interval_frame(a);
  Su3Structure<RatFunc> sfam = fam.forms;
  Su4Lift<RatFunc> lift = lift_su4(sfam, 8);
  check_zero(rep, "lift-closed-omega", "su4-lift", fr8.d(lift.omega));
  check_zero(rep, "lift-closed-psi-plus", "su4-lift", fr8.d(lift.psi_plus));
  check_zero(rep, "lift-closed-psi-minus", "su4-lift", fr8.d(lift.psi_minus));

  Frame<RatFunc> th = scaled_interval_frame(a);
  check_d2(rep, "flat-limit-d2", th);
  auto theta = connection_one_forms(th);
  auto torsion = first_structure_residuals(th, theta);
  bool tf = true;
  std::string tw;
  for (std::size_t i = 0; i < torsion.size(); ++i)
    if (!torsion[i].is_zero()) {
      tf = false;
      tw = "slot " + std::to_string(i + 1) + ": " + print_form(torsion[i]);
      break;
    }
  check_true(rep, "flat-limit-torsion-free", "flat-limit", tf, tw);
  auto curv = curvature_two_forms(th, theta);
  bool flat = true;
  std::string fwit;
  for (int i = 1; i <= 8 && flat; ++i)
    for (int j = 1; j <= 8 && flat; ++j)
      if (!curv[i][j].is_zero()) {
        flat = false;
        fwit = "Omega[" + std::to_string(i) + "][" + std::to_string(j) +
               "] = " + print_form(curv[i][j]);
      }
  check_true(rep, "flat-limit-curvature", "flat-limit", flat, fwit);
}

void hypersurface_checks(VerificationReport& rep, const Fixture& fx,
                         const std::map<std::string, Rational>& params) {
  Frame<Rational> fr7 = bind_params(parse_frame(fx.frame), params);
  Form<Rational> phi = bound_form(fx.forms.at("phi"), 7, params);
  check_d2(rep, "carrier-d2", fr7);
  check_true(rep, "carrier-unimodular", "structure-table", fr7.is_unimodular(),
             "trace of some ad is nonzero");
  HypersurfaceResult hs = induce_hypersurface(fr7, phi, *fx.normal_slot);
  check_zero(rep, "d-phi", "hypersurface", hs.dphi);
  check_zero(rep, "frobenius", "hypersurface", hs.frobenius);
  check_zero(rep, "lie-derivative", "hypersurface", hs.lie_derivative);

  BoundStructure bs;
  bs.id = fx.id;
  bs.frame = hs.frame;
  bs.su3 = hs.su3;
  bs.standard_metric = fx.standard_metric;
  bs.normalized = fx.normalized;
  bs.expected_in_class = fx.expected_in_class;
  bs.expected_obstruction = fx.expected_obstruction;
  sixdim_checks(rep, "induced-", bs, fx, params);
}

}  // namespace

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures = make_fixtures();
  return fixtures;
}

const Fixture& fixture(const std::string& id) {
  for (const auto& f : all_fixtures())
    if (f.id == id) return f;
  throw Error("unknown example id: " + id);
}

std::vector<std::string> list_ids() {
  std::vector<std::string> out;
  for (const auto& f : all_fixtures()) out.push_back(f.id);
  return out;
}

BoundStructure bound_structure(const Fixture& fx,
                               const std::map<std::string, Rational>& params) {
  BoundStructure bs;
  bs.id = fx.id;
  bs.standard_metric = fx.standard_metric;
  bs.normalized = fx.normalized;
  bs.expected_in_class = fx.expected_in_class;
  bs.expected_obstruction = fx.expected_obstruction;
  if (fx.normal_slot) {
    Frame<Rational> fr7 = bind_params(parse_frame(fx.frame), params);
    Form<Rational> phi = bound_form(fx.forms.at("phi"), 7, params);
    HypersurfaceResult hs = induce_hypersurface(fr7, phi, *fx.normal_slot);
    bs.frame = hs.frame;
    bs.su3 = hs.su3;
    return bs;
  }
  if (fx.dim != 6) throw Error("fixture " + fx.id + " has no six-slot reduction");
  bs.frame = bind_params(parse_frame(fx.frame), params);
  bs.su3 = parse_su3_six(fx, params);
  return bs;
}

std::vector<BoundStructure> six_dim_sweep() {
  std::vector<BoundStructure> out;
  for (const auto& fx : all_fixtures()) {
    if (fx.dim == 7 && !fx.normal_slot) continue;
    out.push_back(bound_structure(fx, fx.defaults));
  }
  return out;
}

VerificationReport run_suite(const std::string& id,
                             const std::map<std::string, Rational>& overrides) {
  const Fixture& fx = fixture(id);
  auto params = merged_params(fx, overrides, true);
  VerificationReport rep;
  rep.example = id;
  for (const auto& [k, v] : params) rep.params[k] = v.str();
  if (fx.id == "m-beta")
    mbeta_checks(rep, fx, params);
  else if (fx.normal_slot)
    hypersurface_checks(rep, fx, params);
  else
    sixdim_checks(rep, "", bound_structure(fx, params), fx, params);
  rep.sort_checks();
  return rep;
}

std::vector<VerificationReport> run_all(const std::map<std::string, Rational>& overrides) {
  std::vector<VerificationReport> out;
  std::vector<std::string> ids = list_ids();
  std::sort(ids.begin(), ids.end());
  for (const auto& id : ids) {
    const Fixture& fx = fixture(id);
    out.push_back(run_suite(id, merged_params(fx, overrides, false)));
  }
  return out;
}

}  // namespace g2lab
