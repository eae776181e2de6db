#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "airdrop/eval.hpp"
#include "airdrop/planner.hpp"

namespace airdrop {

struct EvalConfig {
  int trials = 100;
  std::uint64_t master_seed = 1;
};

/// Everything a scenario file describes: the problem instance, the ground
/// truth used for evaluation, and the evaluation defaults.
struct ScenarioBundle {
  Scenario scenario;
  GroundTruth ground_truth;
  EvalConfig eval;
};

/// Parses and fully validates a scenario document. Physics landing specs
/// trigger per-vertex landing estimation. Errors name the offending JSON
/// path (e.g. "uavs[0].budget").
ScenarioBundle parse_scenario_text(const std::string& text,
                                   const std::string& name = "scenario");
ScenarioBundle parse_scenario_file(const std::string& path);

/// Serializes a bundle back to its file form (explicit graph and landing
/// sections, full round-trip float precision).
std::string scenario_to_json_text(const ScenarioBundle& bundle);

std::vector<std::string> scenario_template_names();

/// Builds one of the shipped scenario documents: "scenario1", "scenario2",
/// "scenario3" or "tiny-oracle". The seed feeds the evaluation master seed
/// and, for physics landings, the descent sampling seed.
std::string make_scenario_template(const std::string& name,
                                   std::uint64_t seed);

/// Plan file round trip. The JSON carries the paths, drop sets, per-path
/// costs, the objective value and the invocation that produced it.
std::string plan_to_json_text(const Plan& plan, const Scenario& scenario,
                              const std::string& invocation,
                              std::uint64_t seed);
Plan plan_from_json_text(const std::string& text);
Plan read_plan_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace airdrop
