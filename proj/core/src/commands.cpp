#include "airdrop/commands.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <Eigen/Eigenvalues>

#include "airdrop/errors.hpp"
#include "airdrop/eval.hpp"
#include "airdrop/scenario_io.hpp"
#include "airdrop/util.hpp"

namespace airdrop {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

/// Shortest round-trip decimal form; keeps .dat and .csv output
/// reproducible byte for byte.
std::string fmt(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string digest_hex(const std::string& text) {
  std::ostringstream ss;
  ss << std::hex << fnv1a(text);
  return ss.str();
}

void ensure_dir(const std::string& dir) {
  if (dir.empty()) throw ValidationError("output directory not set");
  fs::create_directories(dir);
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

/// Gnuplot-style route polylines: one block per UAV path.
std::string routes_dat(const Plan& plan, const Scenario& s) {
  std::ostringstream out;
  out << "# x y z (one block per UAV route)\n";
  for (const auto& p : plan.paths) {
    for (VertexId v : p.vertices) {
      const auto& pos = s.graph.vertices[static_cast<std::size_t>(v)].position;
      out << fmt(pos(0)) << ' ' << fmt(pos(1)) << ' ' << fmt(pos(2)) << '\n';
    }
    out << '\n';
  }
  return out.str();
}

/// Landing means with 1-sigma ellipse axes (std devs) and orientation.
std::string landings_dat(const Plan& plan, const Scenario& s) {
  std::ostringstream out;
  out << "# vertex mean_x mean_y sd_major sd_minor angle_rad\n";
  for (const auto& p : plan.paths) {
    for (VertexId v : p.drops) {
      const auto& loc = s.graph.vertices[static_cast<std::size_t>(v)].landing;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(loc.covariance);
      const double sd_minor = std::sqrt(std::max(0.0, eig.eigenvalues()(0)));
      const double sd_major = std::sqrt(std::max(0.0, eig.eigenvalues()(1)));
      const Eigen::Vector2d axis = eig.eigenvectors().col(1);
      out << v << ' ' << fmt(loc.mean(0)) << ' ' << fmt(loc.mean(1)) << ' '
          << fmt(sd_major) << ' ' << fmt(sd_minor) << ' '
          << fmt(std::atan2(axis(1), axis(0))) << '\n';
    }
  }
  return out.str();
}

constexpr const char* kArtifactReadme =
    "Files in this directory:\n"
    "  plan.json      planner output: paths, drop vertices, objective, cost\n"
    "  routes.dat     route polylines, columns: x y z; blank line between UAVs\n"
    "  landings.dat   landing distributions of the planned drops, columns:\n"
    "                 vertex mean_x mean_y sd_major sd_minor angle_rad\n"
    "  report.json    evaluation statistics per planner\n"
    "  trials.csv     per-trial rows: trial,planner,sse,mse,n_drops,seed\n"
    "  poi_errors.dat per-PoI mean squared error, columns:\n"
    "                 planner poi_x poi_y truth mean_sq_error;\n"
    "                 blank line between planners\n"
    "  runtime.csv    bench rows: k,planner,wall_time_s,refused\n";

void write_plan_artifacts(const std::string& out_dir, const Plan& plan,
                          const ScenarioBundle& bundle,
                          const std::string& invocation, std::uint64_t seed) {
  ensure_dir(out_dir);
  write_text_file(join_path(out_dir, "plan.json"),
                  plan_to_json_text(plan, bundle.scenario, invocation, seed));
  write_text_file(join_path(out_dir, "routes.dat"),
                  routes_dat(plan, bundle.scenario));
  write_text_file(join_path(out_dir, "landings.dat"),
                  landings_dat(plan, bundle.scenario));
  write_text_file(join_path(out_dir, "README.txt"), kArtifactReadme);
}

void print_plan_summary(const Plan& plan, const Scenario& s) {
  const CompleteGraph gc = metric_completion(s.graph);
  std::cout << "planner " << plan.planner_name << ": objective "
            << fmt(plan.objective_value) << " nats, wall time "
            << fmt(plan.wall_time) << " s\n";
  for (const auto& p : plan.paths) {
    std::cout << "  uav " << p.uav_index << ": " << p.drops.size()
              << " drops, cost " << fmt(path_cost(p, gc, s.eta)) << "\n";
  }
}

}  // namespace

void cmd_plan(const PlanCommand& cmd) {
  const ScenarioBundle bundle = parse_scenario_file(cmd.scenario_path);
  Plan plan;
  if (cmd.planner == "sga") {
    plan = sga(bundle.scenario, cmd.threads);
  } else if (cmd.planner == "baseline") {
    plan = baseline_deterministic(bundle.scenario, cmd.threads);
  } else if (cmd.planner == "random") {
    plan = baseline_random(bundle.scenario, cmd.seed);
  } else if (cmd.planner == "oracle") {
    plan = brute_force(bundle.scenario);
  } else {
    throw ValidationError("unknown planner \"" + cmd.planner +
                          "\" (known: sga, baseline, random, oracle)");
  }
  write_plan_artifacts(cmd.out_dir, plan, bundle, cmd.invocation, cmd.seed);
  print_plan_summary(plan, bundle.scenario);
}

void cmd_oracle(const OracleCommand& cmd) {
  const ScenarioBundle bundle = parse_scenario_file(cmd.scenario_path);
  const Plan plan = brute_force(bundle.scenario, cmd.limits);
  write_plan_artifacts(cmd.out_dir, plan, bundle, cmd.invocation, 0);
  print_plan_summary(plan, bundle.scenario);
}

void cmd_evaluate(const EvaluateCommand& cmd) {
  const std::string scenario_text = read_text_file(cmd.scenario_path);
  const ScenarioBundle bundle =
      parse_scenario_text(scenario_text, cmd.scenario_path);
  if (cmd.plan_files.empty()) {
    throw ValidationError("evaluate needs at least one plan file");
  }
  const CompleteGraph gc = metric_completion(bundle.scenario.graph);
  std::vector<Plan> plans;
  for (const auto& file : cmd.plan_files) {
    Plan plan = read_plan_file(file);
    if (plan.paths.size() != bundle.scenario.uavs.size()) {
      throw ValidationError(file + ": plan has " +
                            std::to_string(plan.paths.size()) +
                            " paths but the scenario has " +
                            std::to_string(bundle.scenario.uavs.size()) +
                            " UAVs");
    }
    for (std::size_t i = 0; i < plan.paths.size(); ++i) {
      const auto& uav = bundle.scenario.uavs[i];
      const auto violations =
          validate_path(plan.paths[i], gc, uav.depot, uav.budget, uav.sensors,
                        bundle.scenario.eta);
      if (!violations.empty()) {
        throw ValidationError(file + ": path for UAV " + std::to_string(i) +
                              " is infeasible for this scenario: " +
                              violations.front().message);
      }
    }
    const double check = objective(bundle.scenario, plan.drop_union());
    if (std::abs(check - plan.objective_value) > 1e-9) {
      throw ValidationError(
          file + ": stored objective disagrees with this scenario (got " +
          std::to_string(plan.objective_value) + ", recomputed " +
          std::to_string(check) + "); plan/scenario mismatch?");
    }
    plans.push_back(std::move(plan));
  }

  const int trials = cmd.trials > 0 ? cmd.trials : bundle.eval.trials;
  const std::uint64_t seed =
      cmd.seed_set ? cmd.seed : bundle.eval.master_seed;
  const EvalReport report =
      monte_carlo_eval(plans, bundle.scenario, bundle.ground_truth, trials,
                       seed, cmd.threads, digest_hex(scenario_text));

  ensure_dir(cmd.out_dir);
  json j;
  j["invocation"] = cmd.invocation;
  j["seed"] = report.master_seed;
  j["scenario_digest"] = report.scenario_digest;
  j["n_trials"] = report.n_trials;
  json planners = json::array();
  for (const auto& p : report.per_planner) {
    planners.push_back({{"name", p.planner},
                        {"mean_mse", p.mean_mse},
                        {"std_mse", p.std_mse},
                        {"mean_sse", p.mean_sse},
                        {"mean_mi", p.mean_mi},
                        {"mean_wall_time_s", p.mean_wall_time}});
  }
  j["planners"] = planners;
  write_text_file(join_path(cmd.out_dir, "report.json"), j.dump(2) + "\n");

  std::ostringstream csv;
  csv << "trial,planner,sse,mse,n_drops,seed\n";
  for (const auto& row : report.rows) {
    csv << row.trial << ',' << row.planner << ',' << fmt(row.sse) << ','
        << fmt(row.mse) << ',' << row.n_drops << ',' << row.seed << '\n';
  }
  write_text_file(join_path(cmd.out_dir, "trials.csv"), csv.str());

  std::ostringstream dat;
  dat << "# planner poi_x poi_y truth mean_sq_error\n";
  for (const auto& p : report.per_planner) {
    for (std::size_t i = 0; i < bundle.scenario.pois.size(); ++i) {
      dat << p.planner << ' ' << fmt(bundle.scenario.pois[i](0)) << ' '
          << fmt(bundle.scenario.pois[i](1)) << ' '
          << fmt(bundle.ground_truth.value(bundle.scenario.pois[i])) << ' '
          << fmt(p.mean_poi_sq_error[i]) << '\n';
    }
    dat << '\n';
  }
  write_text_file(join_path(cmd.out_dir, "poi_errors.dat"), dat.str());
  write_text_file(join_path(cmd.out_dir, "README.txt"), kArtifactReadme);

  std::cout << "trials: " << report.n_trials << ", master seed "
            << report.master_seed << "\n";
  std::cout << "planner        mean MSE     std MSE      mean MI\n";
  const PlannerStats* sga_stats = nullptr;
  const PlannerStats* base_stats = nullptr;
  for (const auto& p : report.per_planner) {
    std::ostringstream line;
    line << p.planner;
    while (line.str().size() < 15) line << ' ';
    std::cout << line.str() << fmt(p.mean_mse) << "  " << fmt(p.std_mse)
              << "  " << fmt(p.mean_mi) << "\n";
    if (p.planner == "sga") sga_stats = &p;
    if (p.planner == "baseline") base_stats = &p;
  }
  if (sga_stats != nullptr && base_stats != nullptr &&
      base_stats->mean_mse > 0.0) {
    const double improvement =
        100.0 * (base_stats->mean_mse - sga_stats->mean_mse) /
        base_stats->mean_mse;
    std::cout << "sga vs baseline mean MSE improvement: " << fmt(improvement)
              << "%\n";
  }
}

void cmd_bench(const BenchCommand& cmd) {
  const ScenarioBundle bundle = parse_scenario_file(cmd.scenario_path);
  if (cmd.k_list.empty()) {
    throw ValidationError("bench needs a nonempty --k-list");
  }
  const auto rows =
      bench_runtime(bundle.scenario, cmd.k_list, cmd.threads);
  ensure_dir(cmd.out_dir);
  std::ostringstream csv;
  csv << "k,planner,wall_time_s,refused\n";
  for (const auto& r : rows) {
    csv << r.sensors_per_uav << ',' << r.planner << ',' << fmt(r.wall_time)
        << ',' << (r.refused ? 1 : 0) << '\n';
  }
  write_text_file(join_path(cmd.out_dir, "runtime.csv"), csv.str());
  std::cout << csv.str();
}

void cmd_gen_scenario(const GenScenarioCommand& cmd) {
  const std::string text =
      make_scenario_template(cmd.template_name, cmd.seed);
  // Parse what we are about to ship; physics templates estimate landings
  // here, so a broken template fails loudly instead of at first use.
  parse_scenario_text(text, cmd.template_name);
  const fs::path out(cmd.out_path);
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  write_text_file(cmd.out_path, text);
  std::cout << "wrote " << cmd.out_path << "\n";
}

}  // namespace airdrop
