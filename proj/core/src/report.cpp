#include "g2lab/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace g2lab {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerificationReport::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "example: " << r.example;
  if (!r.params.empty()) {
    os << "  (";
    bool first = true;
    for (const auto& [k, v] : r.params) {
      if (!first) os << ", ";
      os << k << "=" << v;
      first = false;
    }
    os << ")";
  }
  os << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.pass)
      os << "  residual: " << c.residual;
    else if (!c.residual.empty() && c.residual != "0")
      os << "  " << c.residual;  // informational detail (class tags, skips)
    os << "\n";
  }
  return os.str();
}

std::string to_text(const std::vector<VerificationReport>& rs) {
  std::string out;
  for (const auto& r : rs) out += to_text(r);
  return out;
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["example"] = r.example;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["paper_anchor"] = c.anchor;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["residual"] = c.residual;
    j["checks"].push_back(jc);
  }
  return j;
}

}  // namespace

std::string to_json(const VerificationReport& r) { return report_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<VerificationReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace g2lab
