#pragma once

#include <string>
#include <vector>

namespace torifan {

/// One verified line of a reproduction report.  A checking step passes when
/// expected and computed agree verbatim; a note step records a value with no
/// expectation and always passes.
struct Step {
  std::string description;
  std::string expected;
  std::string computed;
  std::string provenance;  // "reference", "derived: <oracle>", or "definition"
  bool pass = false;
};

struct Report {
  std::string id;
  std::vector<Step> steps;

  bool overall() const;

  /// Appends a step that passes iff expected == computed.
  void check(const std::string& description, const std::string& provenance,
             const std::string& expected, const std::string& computed);

  /// Appends an always-passing informational step.
  void note(const std::string& description, const std::string& provenance,
            const std::string& computed);
};

/// Deterministic machine form: {"id", "overall", "steps": [...]}.
std::string to_json(const Report& r);

/// Deterministic human-readable table.
std::string to_table(const Report& r);

}  // namespace torifan
