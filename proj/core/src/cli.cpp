#include "g2lab/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "g2lab/errors.hpp"
#include "g2lab/evolution.hpp"
#include "g2lab/parse.hpp"
#include "g2lab/registry.hpp"
#include "g2lab/report.hpp"
#include "g2lab/su3.hpp"

namespace g2lab {

namespace {

std::map<std::string, Rational> parse_param_args(const std::vector<std::string>& kvs) {
  std::map<std::string, Rational> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error("--param expects name=value, got '" + kv + "'");
    out[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw Error("cannot write file: " + out_path);
  os << text;
}

int emit_reports(const std::vector<VerificationReport>& reps, const std::string& format,
                 const std::string& out_path, std::ostream& out) {
  // A single target renders as one report object; --all renders an array.
  std::string text;
  if (format == "json")
    text = reps.size() == 1 ? to_json(reps.front()) : to_json(reps);
  else
    text = to_text(reps);
  emit(text, out_path, out);
  for (const auto& r : reps)
    if (!r.all_pass()) return 1;
  return 0;
}

int cmd_verify(const std::string& id, bool all, const std::vector<std::string>& param_args,
               const std::string& format, const std::string& out_path, std::ostream& out) {
  auto overrides = parse_param_args(param_args);
  std::vector<VerificationReport> reps;
  if (all)
    reps = run_all(overrides);
  else
    reps.push_back(run_suite(id, overrides));
  return emit_reports(reps, format, out_path, out);
}

int cmd_list(std::ostream& out) {
  for (const auto& fx : all_fixtures()) out << fx.id << "  " << fx.title << "\n";
  return 0;
}

void describe_torsion(VerificationReport& rep, const Frame<Rational>& fr,
                      const Su3Structure<Rational>& s) {
  TorsionComponents tc = torsion_decompose(fr, s);
  auto info = [&rep](const std::string& name, const std::string& value) {
    Check c;
    c.name = name;
    c.anchor = "torsion-classes";
    c.pass = true;
    c.residual = value;
    rep.checks.push_back(std::move(c));
  };
  info("torsion-nu0", tc.nu0.str());
  info("torsion-alpha0", tc.alpha0.str());
  info("torsion-nu1", print_form(tc.nu1));
  info("torsion-nu3", print_form(tc.nu3));
  info("torsion-pi1", print_form(tc.pi1));
  info("torsion-pi2", print_form(tc.pi2));
  info("torsion-sigma2", print_form(tc.sigma2));
  std::string cls;
  auto tag = [&cls](bool nonzero, const char* t) {
    if (!nonzero) return;
    if (!cls.empty()) cls += "+";
    cls += t;
  };
  tag(!tc.nu0.is_zero() || !tc.alpha0.is_zero(), "W1");
  tag(!tc.pi2.is_zero() || !tc.sigma2.is_zero(), "W2");
  tag(!tc.nu3.is_zero(), "W3");
  tag(!tc.nu1.is_zero(), "W4");
  tag(!tc.pi1.is_zero(), "W5");
  info("torsion-class", cls.empty() ? "torsion-free" : cls);
  for (const auto& [name, r] : torsion_reconstruction_residuals(fr, s, tc)) {
    Check c;
    c.name = "reconstruct-" + name;
    c.anchor = "torsion-classes";
    c.pass = r.is_zero();
    c.residual = c.pass ? "0" : print_form(r);
    rep.checks.push_back(std::move(c));
  }
}

int cmd_classify(const std::string& path, const std::string& forms_arg,
                 const std::vector<std::string>& param_args, const std::string& format,
                 const std::string& out_path, std::ostream& out) {
  StructureFile sf = parse_structure_file(read_file(path));
  std::map<std::string, Rational> params = sf.params;
  for (const auto& [k, v] : parse_param_args(param_args)) params[k] = v;

  Frame<Poly> fp = parse_frame(sf.frame_text);
  if (fp.dim() != 6) throw Error("classification expects a six-entry frame");
  Frame<Rational> fr = bind_params(fp, params);

  Su3Structure<Rational> s(6);
  std::map<std::string, std::string> form_texts = sf.forms;
  if (forms_arg == "standard")
    form_texts.clear();
  else if (!forms_arg.empty())
    form_texts = parse_structure_file(read_file(forms_arg)).forms;
  if (form_texts.count("omega")) {
    for (const char* key : {"omega", "psi-plus", "psi-minus"})
      if (!form_texts.count(key)) throw Error(std::string("missing form: ") + key);
    s.omega = bind_params(parse_form(form_texts.at("omega"), 6), params);
    s.psi_plus = bind_params(parse_form(form_texts.at("psi-plus"), 6), params);
    s.psi_minus = bind_params(parse_form(form_texts.at("psi-minus"), 6), params);
  } else {
    s = standard_su3(6);
  }

  // The calibration and torsion batteries presuppose a coframe orthonormal
  // for the structure's metric (the decomposition coefficients are tuned to
  // the normalized pair); with foreign forms only the metric-free class
  // analysis applies.
  bool standard_metric = true;
  try {
    (void)complex_structure_matrix(s);
  } catch (const MetricError&) {
    standard_metric = false;
  }

  VerificationReport rep;
  rep.example = path;
  for (const auto& [k, v] : params) rep.params[k] = v.str();
  for (const auto& [name, r] : su3_compatibility_residuals(s)) {
    if (name == "normalization" && !standard_metric) continue;
    Check c;
    c.name = "su3-" + name;
    c.anchor = "su3-compat";
    c.pass = r.is_zero();
    c.residual = c.pass ? "0" : print_form(r);
    rep.checks.push_back(std::move(c));
  }

  W2PlusResult<Rational> w2 = analyze_w2plus(fr, s);
  {
    Check c;
    c.name = "w2plus-class";
    c.anchor = "w2plus";
    c.pass = true;
    c.residual = w2.in_class ? "in-class, pi2 = " + print_form(w2.pi2)
                             : "obstruction: " + w2.obstruction;
    rep.checks.push_back(std::move(c));
  }

  bool torsion_ok = true;
  try {
    describe_torsion(rep, fr, s);
  } catch (const MetricError& e) {
    Check c;
    c.name = "torsion-classes";
    c.anchor = "torsion-classes";
    c.pass = true;
    c.residual = std::string("skipped: ") + e.what();
    rep.checks.push_back(std::move(c));
    torsion_ok = false;
  }
  (void)torsion_ok;
  rep.sort_checks();
  return emit_reports({rep}, format, out_path, out);
}

int cmd_evolve(double a, double u0, double v0, double t_end, double step,
               const std::string& csv, bool check_analytic, double tol_u, double tol_v,
               std::ostream& out) {
  IntegrationResult res = integrate_rk4(a, u0, v0, t_end, step);
  if (!csv.empty()) write_csv(csv, res, a);
  const EvolutionRow& last = res.rows.back();
  std::ostringstream ss;
  ss.precision(12);
  ss << "t = " << last.t << "  u = " << last.u << "  v = " << last.v << "\n";
  if (res.analytic_valid)
    ss << "max |u - u_exact| = " << res.max_err_u << "  max |v - v_exact| = " << res.max_err_v
       << "\n";
  out << ss.str();
  if (check_analytic) {
    if (!res.analytic_valid) throw Error("--check-analytic needs initial data u0 = v0 = 1");
    if (res.max_err_u > tol_u || res.max_err_v > tol_v) return 1;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification of twisted structures on coframe algebras"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the check suite of a stored example");
  std::string verify_id;
  bool verify_all = false;
  std::vector<std::string> verify_params;
  std::string verify_format = "text", verify_out;
  verify->add_option("id", verify_id, "example id (see `list`)");
  verify->add_flag("--all", verify_all, "run every stored example");
  verify->add_option("--param", verify_params, "parameter binding name=value")
      ->take_all()
      ->expected(-1);
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", verify_out, "write the report to a file");

  auto* list = app.add_subcommand("list", "list stored example ids");

  auto* classify = app.add_subcommand("classify", "torsion classes of a structure file");
  std::string cls_file, cls_forms, cls_format = "text", cls_out;
  std::vector<std::string> cls_params;
  classify->add_option("file", cls_file, "structure file")->required();
  classify->add_option("--forms", cls_forms,
                       "'standard', or a file whose [forms] section to use "
                       "(default: forms from the input file, standard if absent)");
  classify->add_option("--param", cls_params, "parameter binding name=value")
      ->take_all()
      ->expected(-1);
  classify->add_option("--format", cls_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  classify->add_option("--out", cls_out, "write the report to a file");

  auto* evolve = app.add_subcommand("evolve", "integrate the scale flow numerically");
  double ev_a = 2.0, ev_u0 = 1.0, ev_v0 = 1.0, ev_tend = 1.0, ev_step = 1e-3;
  double ev_tol_u = 1e-8, ev_tol_v = 1e-10;
  std::string ev_csv;
  bool ev_check = false;
  evolve->add_option("--a", ev_a, "structure scale (default 2)");
  evolve->add_option("--u0", ev_u0, "initial u (default 1)");
  evolve->add_option("--v0", ev_v0, "initial v (default 1)");
  evolve->add_option("--t-end", ev_tend, "final time (default 1)");
  evolve->add_option("--step", ev_step, "step size (default 1e-3)");
  evolve->add_option("--csv", ev_csv, "write the trajectory to a csv file");
  evolve->add_flag("--check-analytic", ev_check, "compare against the closed-form solution");
  evolve->add_option("--tol-u", ev_tol_u, "tolerance for u (default 1e-8)");
  evolve->add_option("--tol-v", ev_tol_v, "tolerance for v (default 1e-10)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream ss;
    int code = app.exit(e, ss, ss);
    (code == 0 ? out : err) << ss.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (verify_all == !verify_id.empty()) {
        err << "verify: give exactly one of an example id or --all\n";
        return 2;
      }
      return cmd_verify(verify_id, verify_all, verify_params, verify_format, verify_out, out);
    }
    if (list->parsed()) return cmd_list(out);
    if (classify->parsed())
      return cmd_classify(cls_file, cls_forms, cls_params, cls_format, cls_out, out);
    if (evolve->parsed())
      return cmd_evolve(ev_a, ev_u0, ev_v0, ev_tend, ev_step, ev_csv, ev_check, ev_tol_u,
                        ev_tol_v, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace g2lab
