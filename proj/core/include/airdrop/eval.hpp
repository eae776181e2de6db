#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "airdrop/planner.hpp"

namespace airdrop {

/// Synthetic scalar field: a sum of isotropic Gaussian bumps.
struct GroundTruthComponent {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  double amplitude = 1.0;
  double width = 1.0;  // meters
};

struct GroundTruth {
  std::vector<GroundTruthComponent> components;

  double value(const Eigen::Vector2d& p) const;
  void validate() const;
};

/// One Monte Carlo rollout of a plan: realized landings, noisy measurements,
/// GP posterior at the PoIs, and the squared-error summary.
struct TrialResult {
  std::vector<Eigen::Vector2d> landings;
  Eigen::VectorXd measurements;
  Eigen::VectorXd poi_predictions;
  Eigen::VectorXd poi_truth;
  double sse = 0.0;
  double mse = 0.0;
};

struct PlannerStats {
  std::string planner;
  double mean_mse = 0.0;
  double std_mse = 0.0;
  double mean_sse = 0.0;
  double mean_mi = 0.0;
  double mean_wall_time = 0.0;
  std::vector<double> mean_poi_sq_error;  // per PoI, averaged over trials
};

struct TrialRow {
  int trial = 0;
  std::string planner;
  double sse = 0.0;
  double mse = 0.0;
  int n_drops = 0;
  std::uint64_t seed = 0;
};

struct EvalReport {
  std::vector<PlannerStats> per_planner;
  std::vector<TrialRow> rows;
  int n_trials = 0;
  std::uint64_t master_seed = 0;
  std::string scenario_digest;
};

double ground_truth_value(const GroundTruth& gt, const Eigen::Vector2d& p);

/// Samples a landing for every drop vertex (the per-vertex stream is derived
/// from the trial seed and the vertex id, so planners sharing a drop vertex
/// see the same landing), measures the field with additive noise, and
/// regresses at the PoIs using the realized landing coordinates.
TrialResult run_trial(const Plan& plan, const Scenario& scenario,
                      const GroundTruth& gt, std::uint64_t seed);

/// Paired Monte Carlo evaluation: trial t uses the seed derived from
/// (master_seed, t) for every planner. Statistics are aggregated with
/// compensated summation in a fixed order.
EvalReport monte_carlo_eval(std::span<const Plan> plans,
                            const Scenario& scenario, const GroundTruth& gt,
                            int n_trials, std::uint64_t master_seed,
                            int threads = 1,
                            const std::string& scenario_digest = "");

struct BenchRow {
  int sensors_per_uav = 0;
  std::string planner;
  double wall_time = 0.0;
  bool refused = false;
};

/// Times sga on the template scenario for each sensor count; runs the
/// brute-force oracle only where the enumeration guard permits, recording
/// refusals instead of failing.
std::vector<BenchRow> bench_runtime(const Scenario& scenario_template,
                                    std::span<const int> sensors_per_uav,
                                    int threads = 1,
                                    const BruteForceLimits& limits = {});

}  // namespace airdrop
