#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "airdrop/planner.hpp"

namespace airdrop {

/// Command backends for the CLI. Each writes its artifacts under the given
/// output directory and throws ValidationError / CapabilityRefusal /
/// NumericError on failure; the binary maps those to exit codes 1 / 2 / 3.

struct PlanCommand {
  std::string scenario_path;
  std::string planner = "sga";  // sga | baseline | random | oracle
  std::string out_dir;
  std::uint64_t seed = 0;  // used by the random planner
  int threads = 1;
  std::string invocation;
};
void cmd_plan(const PlanCommand& cmd);

struct EvaluateCommand {
  std::string scenario_path;
  std::vector<std::string> plan_files;
  int trials = 0;  // 0: use the scenario's eval section
  std::uint64_t seed = 0;
  bool seed_set = false;  // false: use the scenario's master seed
  std::string out_dir;
  int threads = 1;
  std::string invocation;
};
void cmd_evaluate(const EvaluateCommand& cmd);

struct OracleCommand {
  std::string scenario_path;
  std::string out_dir;
  BruteForceLimits limits;
  std::string invocation;
};
void cmd_oracle(const OracleCommand& cmd);

struct BenchCommand {
  std::string scenario_path;
  std::vector<int> k_list;
  std::string out_dir;
  int threads = 1;
  std::string invocation;
};
void cmd_bench(const BenchCommand& cmd);

struct GenScenarioCommand {
  std::string template_name;
  std::uint64_t seed = 1;
  std::string out_path;
};
void cmd_gen_scenario(const GenScenarioCommand& cmd);

}  // namespace airdrop
