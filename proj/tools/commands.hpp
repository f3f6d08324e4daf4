#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace tcas::cli {

enum class Format { Text, Json };

struct RunConfig {
  std::string command;
  int n = 2;
  int k = 2;
  int j = 2;
  Format format = Format::Text;
  std::uint64_t seed = 1;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpected = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCheckFailed = 3;

const std::vector<std::string>& command_names();

/// Executes one command, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tcas::cli
