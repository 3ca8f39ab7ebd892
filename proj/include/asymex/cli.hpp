// SPDX-License-Identifier: Apache-2.0
#pragma once

// Command-line pipeline. Exit codes: 0 ok, 1 internal error, 2 config error,
// 3 input parse error, 4 exact cap exceeded without --heuristic, 5 invariant
// violation found by `verify`.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "asymex/exact.hpp"
#include "asymex/report.hpp"

namespace asymex {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitConfig = 2,
  kExitParse = 3,
  kExitCap = 4,
  kExitViolation = 5,
};

struct RunConfig {
  std::string subcommand;  ///< gen, analyze, decompose, certify, operator, verify
  std::string manifest;
  std::string out = "asymex-out";
  std::vector<double> alphas;
  std::vector<double> epsilons;
  std::optional<int> r_max;  ///< default 2 * max block diameter
  std::vector<double> radius;
  std::size_t exact_cap = exact::kDefaultCap;
  std::uint64_t seed = 1;
  std::size_t threads = 1;  ///< never embedded in reports
  bool heuristic = false;   ///< allow heuristic fallback above the exact cap
  std::string kind;
  std::vector<int> ns;
  int d = 3;
  std::optional<std::size_t> bridge_len;
  std::string exhaustion;  ///< decompose report consumed by `operator` and checked by `verify`
  bool nest = false;
  std::vector<std::string> suites;
  std::size_t count = 200;
};

const std::vector<std::string>& subcommands();

/// "a..b", "a..b:step", "a,b,c" or a single integer. Throws ConfigError.
std::vector<int> parse_n_range(const std::string& text);

/// Fills per-subcommand defaults and checks ranges. Throws ConfigError.
RunConfig validate(RunConfig config);

/// Mirrors the flags (threads excluded).
Json config_to_json(const RunConfig& config);
/// Reads a --config object over `base`; unknown keys are errors. Throws ConfigError.
RunConfig config_from_json(const Json& j, RunConfig base = {});

/// Runs a validated config. Library errors propagate.
int run(const RunConfig& config, std::ostream& out);

/// Parses argv, runs, and maps exceptions to exit codes.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace asymex
