#pragma once

#include <map>
#include <string>
#include <vector>

namespace g2lab {

// One named verification with its anchor tag and residual witness text ("0"
// on success, otherwise the leftover form in the input term grammar).
struct Check {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string residual = "0";
};

struct VerificationReport {
  std::string example;
  std::map<std::string, std::string> params;
  std::vector<Check> checks;

  bool all_pass() const;
  void sort_checks();
};

std::string to_text(const VerificationReport& r);
std::string to_text(const std::vector<VerificationReport>& rs);
std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& rs);

}  // namespace g2lab
