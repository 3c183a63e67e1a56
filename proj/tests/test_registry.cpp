#include <doctest.h>

#include <algorithm>
#include <json.hpp>

#include "g2lab/parse.hpp"
#include "g2lab/registry.hpp"

using namespace g2lab;

TEST_CASE("fixture catalogue") {
  std::vector<std::string> ids = list_ids();
  REQUIRE(ids.size() == 9);
  CHECK(ids.front() == "m-beta");
  for (const char* id : {"torus6", "nil-t2t4", "nil-t3t3", "dbt-family", "hypersurface-g2",
                         "nakamura", "hyperkahler-t2", "example-0025"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());

  CHECK(fixture("m-beta").dim == 7);
  CHECK(fixture("torus6").dim == 6);
  CHECK(fixture("hypersurface-g2").normal_slot == 6);
  CHECK(fixture("nakamura").normal_slot == 7);
  CHECK_THROWS_AS((void)fixture("nope"), Error);

  // every stored coframe round-trips through the parser at its stated dim
  for (const Fixture& fx : all_fixtures()) {
    Frame<Poly> fr = parse_frame(fx.frame);
    CHECK(fr.dim() == fx.dim);
  }
}

TEST_CASE("six-dim sweep covers every six-slot case") {
  std::vector<BoundStructure> sweep = six_dim_sweep();
  REQUIRE(sweep.size() == 8);
  std::vector<std::string> ids;
  for (const auto& bs : sweep) ids.push_back(bs.id);
  CHECK(std::find(ids.begin(), ids.end(), "m-beta") == ids.end());
  for (const auto& bs : sweep) {
    INFO(bs.id);
    CHECK(bs.frame.check_d2());
    CHECK(su3_nondegenerate(bs.su3));
    for (const auto& [name, r] : su3_compatibility_residuals(bs.su3)) {
      INFO(name);
      if (name == "normalization" && !bs.normalized) {
        // dbt-family ships a psi pair at half calibration: psi+ ^ psi- is
        // (1/3) omega^3, and no rational rescale can repair a sqrt(2) factor.
        CHECK(!r.is_zero());
        continue;
      }
      CHECK(r.is_zero());
    }
  }
}

TEST_CASE("bound structure rejects bad input") {
  CHECK_THROWS_AS((void)bound_structure(fixture("m-beta"), fixture("m-beta").defaults), Error);
}

TEST_CASE("rank-one suite passes at the default and at an override") {
  VerificationReport rep = run_suite("m-beta");
  CHECK(rep.example == "m-beta");
  CHECK(rep.params.at("a") == "2");
  CHECK(rep.all_pass());
  auto has = [&](const std::string& name) {
    return std::any_of(rep.checks.begin(), rep.checks.end(),
                       [&](const Check& c) { return c.name == name; });
  };
  CHECK(has("weak-integrability"));
  CHECK(has("coclosed-h"));
  CHECK(has("ricci-diagonal"));
  CHECK(has("q-volume"));
  CHECK(has("solve-weak-h"));
  CHECK(has("flat-limit-curvature"));

  VerificationReport rep3 = run_suite("m-beta", {{"a", Rational(3)}});
  CHECK(rep3.params.at("a") == "3");
  CHECK(rep3.all_pass());

  CHECK_THROWS_AS((void)run_suite("m-beta", {{"bogus", Rational(1)}}), Error);
  CHECK_THROWS_AS((void)run_suite("nope"), Error);
}

TEST_CASE("checks come back sorted") {
  VerificationReport rep = run_suite("torus6");
  CHECK(rep.all_pass());
  CHECK(std::is_sorted(rep.checks.begin(), rep.checks.end(),
                       [](const Check& a, const Check& b) { return a.name < b.name; }));
}

TEST_CASE("the whole catalogue verifies") {
  std::vector<VerificationReport> reps = run_all();
  REQUIRE(reps.size() == 9);
  CHECK(std::is_sorted(reps.begin(), reps.end(),
                       [](const VerificationReport& a, const VerificationReport& b) {
                         return a.example < b.example;
                       }));
  for (const auto& rep : reps) {
    INFO(rep.example);
    CHECK(rep.all_pass());
  }
  // non-strict overrides apply only where the parameter exists
  std::vector<VerificationReport> reps5 = run_all({{"a", Rational(5)}});
  for (const auto& rep : reps5) {
    INFO(rep.example);
    CHECK(rep.all_pass());
    if (rep.example == "m-beta") CHECK(rep.params.at("a") == "5");
  }
}

TEST_CASE("report rendering") {
  VerificationReport rep = run_suite("torus6");
  std::string text = to_text(rep);
  CHECK(text.find("example: torus6") == 0);
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);

  nlohmann::json j = nlohmann::json::parse(to_json(rep));
  CHECK(j["example"] == "torus6");
  CHECK(j["params"].is_object());
  REQUIRE(j["checks"].is_array());
  REQUIRE(!j["checks"].empty());
  for (const auto& jc : j["checks"]) {
    CHECK(jc.contains("name"));
    CHECK(jc.contains("paper_anchor"));
    CHECK(jc["status"] == "pass");
    CHECK(jc.contains("residual"));
  }

  VerificationReport bad;
  bad.example = "synthetic";
  bad.checks.push_back({"b-check", "anchor", false, "12"});
  bad.checks.push_back({"a-check", "anchor", true, "0"});
  CHECK(!bad.all_pass());
  bad.sort_checks();
  CHECK(bad.checks.front().name == "a-check");
  std::string badtext = to_text(bad);
  CHECK(badtext.find("[FAIL] b-check  residual: 12") != std::string::npos);

  nlohmann::json arr = nlohmann::json::parse(to_json(std::vector<VerificationReport>{rep, bad}));
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 2);
  CHECK(arr[1]["checks"][1]["status"] == "fail");
}
