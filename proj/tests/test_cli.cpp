#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "g2lab/cli.hpp"

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = g2lab::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  REQUIRE(os.good());
  os << text;
}

}  // namespace

TEST_CASE("list prints the catalogue") {
  CliResult r = run({"list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("m-beta") != std::string::npos);
  CHECK(r.out.find("torus6") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("verify a single example") {
  CliResult r = run({"verify", "m-beta"});
  CHECK(r.code == 0);
  CHECK(r.out.find("example: m-beta") != std::string::npos);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);

  CliResult r3 = run({"verify", "m-beta", "--param", "a=3"});
  CHECK(r3.code == 0);
  CHECK(r3.out.find("a=3") != std::string::npos);
}

TEST_CASE("verify all as json") {
  CliResult r = run({"verify", "--all", "--format", "json"});
  CHECK(r.code == 0);
  nlohmann::json arr = nlohmann::json::parse(r.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 9);
  for (const auto& rep : arr)
    for (const auto& c : rep["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("verify writes to a file") {
  const std::string path = "cli_verify_out.json";
  CliResult r = run({"verify", "torus6", "--format", "json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream is(path);
  REQUIRE(is.good());
  nlohmann::json j = nlohmann::json::parse(is);
  CHECK(j["example"] == "torus6");
  is.close();
  std::remove(path.c_str());
}

TEST_CASE("verify usage errors") {
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "m-beta", "--all"}).code == 2);
  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"verify", "m-beta", "--param", "oops"}).code == 2);
  CHECK(run({"verify", "m-beta", "--format", "yaml"}).code == 2);
}

TEST_CASE("classify a structure file with its own forms") {
  const std::string path = "cli_classify_dbt.txt";
  write_file(path,
             "# six-slot carrier with one parameter\n"
             "(0, 0, 0,\n"
             " 12, 13, 23)\n"
             "\n"
             "[forms]\n"
             "omega = 16 + mu*25 + mu*34 - 34\n"
             "psi-plus = 124 - mu*124 + mu*135 - mu^2*456 + mu*456 - 236\n"
             "psi-minus = mu^2*145 - mu*145 + mu*246 - 246 + mu*356 + 123\n"
             "\n"
             "[params]\n"
             "mu = 2\n");
  CliResult r = run({"classify", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("in-class, pi2 = ") != std::string::npos);
  // the induced metric is not the flat one, so class tags are unavailable
  CHECK(r.out.find("skipped: ") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("classify with standard forms reports torsion classes") {
  const std::string path = "cli_classify_torus.txt";
  write_file(path, "(0, 0, 0, 0, 0, 0)\n");
  CliResult r = run({"classify", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("torsion-free") != std::string::npos);
  CHECK(r.out.find("reconstruct-d-omega") != std::string::npos);

  const std::string nil = "cli_classify_nil.txt";
  write_file(nil, "(0, 0, 0, 12, 13, 23)\n");
  CliResult rn = run({"classify", nil, "--forms", "standard"});
  CHECK(rn.code == 0);
  CHECK(rn.out.find("obstruction: d-omega") != std::string::npos);
  std::remove(path.c_str());
  std::remove(nil.c_str());
}

TEST_CASE("classify flags a broken structure") {
  const std::string path = "cli_classify_broken.txt";
  write_file(path,
             "(0, 0, 0, 0, 0, 0)\n"
             "[forms]\n"
             "omega = 12 + 34 + 56\n"
             "psi-plus = 2*135 - 2*146 - 2*236 - 2*245\n"
             "psi-minus = 136 + 145 + 235 - 246\n");
  CliResult r = run({"classify", path});
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL] su3-normalization") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("classify input errors") {
  CHECK(run({"classify", "/nonexistent/file.txt"}).code == 2);

  const std::string path = "cli_classify_dim7.txt";
  write_file(path, "(0, 0, 0, 0, 0, 0, 0)\n");
  CHECK(run({"classify", path}).code == 2);
  std::remove(path.c_str());

  const std::string bad = "cli_classify_bad.txt";
  write_file(bad, "(0, 0, 12 +\n");
  CHECK(run({"classify", bad}).code == 2);
  std::remove(bad.c_str());
}

TEST_CASE("evolve matches the closed-form solution") {
  CliResult r = run({"evolve", "--check-analytic"});
  CHECK(r.code == 0);
  CHECK(r.out.find("max |u - u_exact|") != std::string::npos);

  CliResult off = run({"evolve", "--check-analytic", "--u0", "2"});
  CHECK(off.code == 2);
  CHECK(off.err.find("initial data") != std::string::npos);

  const std::string path = "cli_evolve.csv";
  CliResult csv = run({"evolve", "--t-end", "0.05", "--csv", path});
  CHECK(csv.code == 0);
  std::ifstream is(path);
  CHECK(is.good());
  is.close();
  std::remove(path.c_str());
}

TEST_CASE("top-level usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}
