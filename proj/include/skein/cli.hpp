// Command-line front end and the randomized check suites it exposes.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace skein {

enum ExitCode { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

struct SuiteOutcome {
  std::string suite;
  std::uint64_t seed = 0;
  int count = 0;
  int passed = 0;
  int failed = 0;
  nlohmann::json failures = nlohmann::json::array();

  nlohmann::json to_json() const;
};

/// Known suite names, in the order `check all` runs them.
const std::vector<std::string>& suite_names();

/// Runs `count` instances; instance k uses seed `seed * 1000003 + k`.
/// Throws SkeinError for an unknown suite.
SuiteOutcome run_suite(const std::string& name, std::uint64_t seed, int count, int max_crossings);

/// Entry point; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skein
