#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace tcas {

enum class Status { Pass, Fail, Info };

std::string to_string(Status s);

/// One assertion of a verification run. `anchor` names the claim being
/// checked; `details` carries recorded constants and counterexamples.
struct Check {
  std::string id;
  std::string anchor;
  Status status = Status::Pass;
  nlohmann::json details = nlohmann::json::object();
};

struct Report {
  std::string operation;
  int n = 0;
  int k = 0;
  std::vector<Check> checks;

  /// Adds a pass/fail check.
  Check& expect(std::string id, std::string anchor, bool ok, nlohmann::json details = nlohmann::json::object());
  /// Adds an informational record (never fails the report).
  Check& note(std::string id, std::string anchor, nlohmann::json details);
  void append(const Report& other);

  bool passed() const;
  std::size_t failures() const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace tcas
