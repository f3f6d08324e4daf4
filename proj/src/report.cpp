#include "tcas/report.hpp"

#include <algorithm>
#include <sstream>

namespace tcas {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "?";
}

Check& Report::expect(std::string id, std::string anchor, bool ok, nlohmann::json details) {
  checks.push_back({std::move(id), std::move(anchor), ok ? Status::Pass : Status::Fail, std::move(details)});
  return checks.back();
}

Check& Report::note(std::string id, std::string anchor, nlohmann::json details) {
  checks.push_back({std::move(id), std::move(anchor), Status::Info, std::move(details)});
  return checks.back();
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; }));
}

bool Report::passed() const { return failures() == 0; }

nlohmann::json Report::to_json() const {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& c : checks)
    records.push_back({{"id", c.id}, {"paper_anchor", c.anchor}, {"status", to_string(c.status)}, {"details", c.details}});
  return {{"operation", operation}, {"n", n}, {"k", k}, {"passed", passed()}, {"records", records}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << operation << " n=" << n << " k=" << k << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks.size()
      << " records, " << failures() << " failed)\n";
  for (const auto& c : checks) {
    out << "  [" << to_string(c.status) << "] " << c.id << " (" << c.anchor << ")";
    if (!c.details.empty()) out << " " << c.details.dump();
    out << "\n";
  }
  return out.str();
}

}  // namespace tcas
