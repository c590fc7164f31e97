#include "torifan/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace torifan {

bool Report::overall() const {
  return std::all_of(steps.begin(), steps.end(), [](const Step& s) { return s.pass; });
}

void Report::check(const std::string& description, const std::string& provenance,
                   const std::string& expected, const std::string& computed) {
  steps.push_back(Step{description, expected, computed, provenance, expected == computed});
}

void Report::note(const std::string& description, const std::string& provenance,
                  const std::string& computed) {
  steps.push_back(Step{description, "-", computed, provenance, true});
}

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["overall"] = r.overall();
  j["steps"] = nlohmann::ordered_json::array();
  for (const Step& s : r.steps) {
    nlohmann::ordered_json step;
    step["description"] = s.description;
    step["expected"] = s.expected;
    step["computed"] = s.computed;
    step["provenance"] = s.provenance;
    step["pass"] = s.pass;
    j["steps"].push_back(std::move(step));
  }
  return j.dump(2) + "\n";
}

std::string to_table(const Report& r) {
  std::string out = r.id + ": " + (r.overall() ? "PASS" : "FAIL") + " (" +
                    std::to_string(r.steps.size()) + " steps)\n";
  for (const Step& s : r.steps) {
    out += std::string("  ") + (s.pass ? "ok  " : "XX  ") + s.description + "\n";
    out += "      expected " + s.expected + "\n";
    out += "      computed " + s.computed + "\n";
    out += "      source   " + s.provenance + "\n";
  }
  return out;
}

}  // namespace torifan
