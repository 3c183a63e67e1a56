#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2lab/form.hpp"
#include "g2lab/frame.hpp"
#include "g2lab/report.hpp"
#include "g2lab/su3.hpp"

namespace g2lab {

// A named example: a coframe d-table plus structure forms, stored in the
// text grammar of parse.hpp so every fixture round-trips through the parser.
// Forms named omega / psi-plus / psi-minus are six-slot; eta, phi, h,
// rho, rho-hat live on the carrier dimension.
struct Fixture {
  std::string id;
  std::string title;
  int dim = 6;
  std::string frame;
  std::map<std::string, std::string> forms;
  std::map<std::string, Rational> defaults;
  bool standard_metric = true;        // coframe orthonormal for the induced metric
  bool normalized = true;             // psi+ ^ psi- = (2/3) omega^3 holds as printed
  std::optional<int> normal_slot;     // hypersurface examples: distinguished slot
  std::optional<bool> expected_in_class;
  std::string expected_obstruction;   // "", "d-omega", "d-psi-minus", "pi2-space"
  bool expect_dpi2_nonzero = false;
};

const std::vector<Fixture>& all_fixtures();
const Fixture& fixture(const std::string& id);  // throws Error on unknown id
std::vector<std::string> list_ids();

// Six-slot structure with parameters bound, either direct or induced from a
// hypersurface fixture.
struct BoundStructure {
  BoundStructure() : frame(6), su3(6) {}
  std::string id;
  Frame<Rational> frame;
  Su3Structure<Rational> su3;
  bool standard_metric = true;
  bool normalized = true;
  std::optional<bool> expected_in_class;
  std::string expected_obstruction;
};

BoundStructure bound_structure(const Fixture& fx,
                               const std::map<std::string, Rational>& params);
std::vector<BoundStructure> six_dim_sweep();  // all six-slot cases, default params

VerificationReport run_suite(const std::string& id,
                             const std::map<std::string, Rational>& overrides = {});
std::vector<VerificationReport> run_all(const std::map<std::string, Rational>& overrides = {});

}  // namespace g2lab
