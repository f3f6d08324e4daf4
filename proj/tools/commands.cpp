#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <json.hpp>

#include "tcas/errors.hpp"
#include "tcas/forms.hpp"
#include "tcas/suites.hpp"

namespace tcas::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_nk(const RunConfig& c) {
  if (c.n < 2) throw UsageError("--n must be at least 2");
  if (c.k < 2 || c.k > c.n) throw UsageError("--k must satisfy 2 <= k <= n");
}

int emit(const Report& r, const RunConfig& c, std::ostream& out) {
  if (c.format == Format::Json) out << r.to_json().dump(2) << "\n";
  else out << r.to_text();
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int eigenvalues(const RunConfig& c, std::ostream& out) {
  require_nk(c);
  const auto series = tractor_T_series(c.k, c.n);
  const auto table = eigenvalue_table(series, c.n + 2);
  json rows = json::array();
  for (std::size_t s = 0; s < series.slots.size(); ++s)
    for (std::size_t b = 0; b < series.slots[s].size(); ++b)
      rows.push_back({{"slot", s}, {"branch", b}, {"bundle", series.slots[s][b].str()}, {"eigenvalue", table[s][b].str()}});
  const Report check = verify_eigenvalues(c.n, c.k);
  if (c.format == Format::Json) {
    out << json{{"n", c.n}, {"k", c.k}, {"slots", rows}, {"check", check.to_json()}}.dump(2) << "\n";
  } else {
    for (const auto& row : rows)
      out << "slot " << row["slot"].get<int>() << "." << row["branch"].get<int>() << "  "
          << row["bundle"].get<std::string>() << "  beta=" << row["eigenvalue"].get<std::string>() << "\n";
    out << check.to_text();
  }
  return check.passed() ? kExitOk : kExitCheckFailed;
}

int decompose(const RunConfig& c, std::ostream& out) {
  if (c.n < 2) throw UsageError("--n must be at least 2");
  if (c.j < 0 || c.j > 2 * c.n) throw UsageError("--j must satisfy 0 <= j <= 2n");
  const auto parts = decompose_forms(c.j, c.n);
  if (c.format == Format::Json) {
    json records = json::array();
    for (const auto& b : parts) records.push_back(to_json(b));
    out << json{{"j", c.j}, {"n", c.n}, {"records", records}}.dump(2) << "\n";
  } else {
    for (const auto& b : parts) out << b.str() << "  rank=" << b.rank(c.n) << "\n";
  }
  return kExitOk;
}

int series(const RunConfig& c, std::ostream& out) {
  require_nk(c);
  const auto s = tractor_T_series(c.k, c.n);
  if (c.format == Format::Json) out << to_json(s).dump(2) << "\n";
  else out << to_text(s);
  return kExitOk;
}

using Suite = std::function<Report(const RunConfig&)>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{
      {"verify-action", [](const RunConfig& c) { return verify_action(c.n, c.k, c.seed, 100, c.n == 2); }},
      {"verify-balpha", [](const RunConfig& c) { return verify_balpha(c.n, c.k, c.seed); }},
      {"verify-md-vanish", [](const RunConfig& c) { return verify_md_vanish(c.n, c.k); }},
      {"verify-symbol-paths", [](const RunConfig& c) { return verify_symbol_paths(c.n, c.k); }},
      {"verify-obstruction", [](const RunConfig& c) { return verify_obstruction(c.n, c.k, c.seed); }},
      {"verify-all", [](const RunConfig& c) { return verify_all(c.n, c.k, c.seed); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"eigenvalues",      "decompose-forms",     "series",
                                              "verify-action",    "verify-balpha",       "verify-md-vanish",
                                              "verify-symbol-paths", "verify-obstruction", "verify-all"};
  return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "eigenvalues") return eigenvalues(config, out);
    if (config.command == "decompose-forms") return decompose(config, out);
    if (config.command == "series") return series(config, out);
    const auto it = suites().find(config.command);
    if (it == suites().end()) throw UsageError("unknown command '" + config.command + "'");
    require_nk(config);
    return emit(it->second(config), config, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EngineDefect& e) {
    err << "engine defect: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnexpected;
  }
}

}  // namespace tcas::cli
