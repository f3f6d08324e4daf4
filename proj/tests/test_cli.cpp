#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "commands.hpp"

using namespace tcas::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(RunConfig c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eigenvalues table") {
  RunConfig c;
  c.command = "eigenvalues";
  c.n = 3;
  c.k = 2;
  const Result r = invoke(c);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("beta=4") != std::string::npos);
  CHECK(r.out.find("beta=-4") != std::string::npos);

  c.format = Format::Json;
  const auto j = nlohmann::json::parse(invoke(c).out);
  CHECK(j["slots"].size() == 6);
}

TEST_CASE("decompose-forms j=4 n=4") {
  RunConfig c;
  c.command = "decompose-forms";
  c.n = 4;
  c.j = 4;
  c.format = Format::Json;
  const Result r = invoke(c);
  REQUIRE(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["records"].size() == 3);
}

TEST_CASE("invalid parameters are usage errors") {
  RunConfig c;
  c.command = "verify-all";
  c.n = 2;
  c.k = 3;
  const Result r = invoke(c);
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("usage error") != std::string::npos);
  c.command = "no-such-command";
  c.k = 2;
  CHECK(invoke(c).code == kExitUsage);
  c.command = "decompose-forms";
  c.j = 9;
  CHECK(invoke(c).code == kExitUsage);
}

TEST_CASE("verify-all at n = k = 2 passes and is deterministic") {
  RunConfig c;
  c.command = "verify-all";
  c.format = Format::Json;
  const Result a = invoke(c);
  const Result b = invoke(c);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["passed"] == true);
}

TEST_CASE("every command name dispatches") {
  for (const auto& name : command_names()) {
    if (name.rfind("verify", 0) == 0 && name != "verify-balpha") continue;
    RunConfig c;
    c.command = name;
    CHECK_MESSAGE(invoke(c).code == kExitOk, name);
  }
}
