#include <doctest.h>

#include "tcas/report.hpp"
#include "tcas/suites.hpp"

using namespace tcas;

TEST_CASE("report records and status") {
  Report r{"demo", 2, 2, {}};
  r.expect("a", "anchor-a", true, {{"value", 1}});
  r.note("b", "anchor-b", {{"value", "x"}});
  CHECK(r.passed());
  r.expect("c", "anchor-c", false);
  CHECK_FALSE(r.passed());
  CHECK(r.failures() == 1);
  const auto j = r.to_json();
  REQUIRE(j["records"].size() == 3);
  CHECK(j["records"][1]["status"] == "info");
  CHECK(j["records"][2]["paper_anchor"] == "anchor-c");
  CHECK(r.to_text().find("FAIL (3 records, 1 failed)") != std::string::npos);
}

TEST_CASE("append keeps order") {
  Report a{"a", 2, 2, {}}, b{"b", 2, 2, {}};
  a.expect("x", "x", true);
  b.expect("y", "y", true);
  a.append(b);
  REQUIRE(a.checks.size() == 2);
  CHECK(a.checks[1].id == "y");
}

TEST_CASE("eigenvalue and Casimir suites pass") {
  CHECK(verify_eigenvalues(3, 2).passed());
  CHECK(verify_casimir(3, 3).passed());
}
