#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "airdrop/commands.hpp"
#include "airdrop/errors.hpp"

namespace {

std::string join_invocation(int argc, char** argv) {
  std::ostringstream ss;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) ss << ' ';
    ss << argv[i];
  }
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "airdrop: plan and evaluate multi-UAV sensor airdrop missions"};
  app.require_subcommand(1);
  const std::string invocation = join_invocation(argc, argv);

  airdrop::PlanCommand plan_cmd;
  plan_cmd.invocation = invocation;
  auto* plan = app.add_subcommand(
      "plan", "Plan UAV routes and drop vertices for a scenario");
  plan->add_option("--scenario", plan_cmd.scenario_path, "Scenario JSON file")
      ->required();
  plan->add_option("--planner", plan_cmd.planner,
                   "Planner: sga | baseline | random | oracle")
      ->default_val("sga");
  plan->add_option("--out", plan_cmd.out_dir, "Output directory")->required();
  plan->add_option("--seed", plan_cmd.seed, "Seed for the random planner");
  plan->add_option("--threads", plan_cmd.threads, "Worker thread cap");
  plan->callback([&] { airdrop::cmd_plan(plan_cmd); });

  airdrop::EvaluateCommand eval_cmd;
  eval_cmd.invocation = invocation;
  auto* evaluate = app.add_subcommand(
      "evaluate", "Monte Carlo evaluation of plans against ground truth");
  evaluate
      ->add_option("--scenario", eval_cmd.scenario_path, "Scenario JSON file")
      ->required();
  evaluate->add_option("plans", eval_cmd.plan_files, "plan.json files")
      ->required();
  evaluate->add_option("--trials", eval_cmd.trials,
                       "Number of paired trials (default: scenario eval section)");
  auto* seed_opt = evaluate->add_option(
      "--seed", eval_cmd.seed, "Master seed (default: scenario eval section)");
  evaluate->add_option("--out", eval_cmd.out_dir, "Output directory")
      ->required();
  evaluate->add_option("--threads", eval_cmd.threads, "Worker thread cap");
  evaluate->callback([&] {
    eval_cmd.seed_set = seed_opt->count() > 0;
    airdrop::cmd_evaluate(eval_cmd);
  });

  airdrop::OracleCommand oracle_cmd;
  oracle_cmd.invocation = invocation;
  auto* oracle = app.add_subcommand(
      "oracle", "Exhaustive brute-force planner (small instances only)");
  oracle
      ->add_option("--scenario", oracle_cmd.scenario_path, "Scenario JSON file")
      ->required();
  oracle->add_option("--out", oracle_cmd.out_dir, "Output directory")
      ->required();
  oracle->add_option("--max-assignments", oracle_cmd.limits.max_assignments,
                     "Enumeration guard");
  oracle->callback([&] { airdrop::cmd_oracle(oracle_cmd); });

  airdrop::BenchCommand bench_cmd;
  bench_cmd.invocation = invocation;
  auto* bench = app.add_subcommand(
      "bench", "Time the planners over a range of sensor counts");
  bench->add_option("--scenario", bench_cmd.scenario_path, "Scenario JSON file")
      ->required();
  bench->add_option("--k-list", bench_cmd.k_list, "Sensor counts, e.g. 2,4,8")
      ->required()
      ->delimiter(',');
  bench->add_option("--out", bench_cmd.out_dir, "Output directory")->required();
  bench->add_option("--threads", bench_cmd.threads, "Worker thread cap");
  bench->callback([&] { airdrop::cmd_bench(bench_cmd); });

  airdrop::GenScenarioCommand gen_cmd;
  auto* gen = app.add_subcommand("gen-scenario",
                                 "Write one of the shipped scenario files");
  gen->add_option("template", gen_cmd.template_name,
                  "scenario1 | scenario2 | scenario3 | tiny-oracle")
      ->required();
  gen->add_option("--seed", gen_cmd.seed, "Scenario seed");
  gen->add_option("--out", gen_cmd.out_path, "Output file path")->required();
  gen->callback([&] { airdrop::cmd_gen_scenario(gen_cmd); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const airdrop::CapabilityRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const airdrop::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const airdrop::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
