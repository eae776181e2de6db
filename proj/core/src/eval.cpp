#include "airdrop/eval.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "airdrop/dropsim.hpp"
#include "airdrop/errors.hpp"
#include "airdrop/rng.hpp"
#include "airdrop/util.hpp"

namespace airdrop {

void GroundTruth::validate() const {
  if (components.empty()) {
    throw ValidationError("ground truth needs at least one component");
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!(components[i].width > 0.0)) {
      throw ValidationError("ground_truth[" + std::to_string(i) +
                            "].width must be > 0");
    }
  }
}

double GroundTruth::value(const Eigen::Vector2d& p) const {
  KahanSum sum;
  for (const auto& c : components) {
    const double d2 = (p - c.center).squaredNorm();
    sum.add(c.amplitude * std::exp(-d2 / (2.0 * c.width * c.width)));
  }
  return sum.value();
}

double ground_truth_value(const GroundTruth& gt, const Eigen::Vector2d& p) {
  return gt.value(p);
}

TrialResult run_trial(const Plan& plan, const Scenario& scenario,
                      const GroundTruth& gt, std::uint64_t seed) {
  const auto drops = plan.drop_union();
  const double noise_sd = std::sqrt(scenario.noise.measurement_variance);

  TrialResult out;
  out.landings.reserve(drops.size());
  out.measurements.resize(static_cast<Eigen::Index>(drops.size()));
  for (std::size_t i = 0; i < drops.size(); ++i) {
    const VertexId v = drops[i];
    if (v < 0 || v >= static_cast<int>(scenario.graph.vertices.size())) {
      throw ValidationError("trial: unknown drop vertex " + std::to_string(v));
    }
    // Stream tied to the vertex id: planners with overlapping drop sets see
    // identical landing draws within a trial.
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(v)));
    const auto& node = scenario.graph.vertices[static_cast<std::size_t>(v)];
    const Eigen::Vector2d landing = sample_landing(node.landing, rng);
    out.landings.push_back(landing);
    out.measurements(static_cast<Eigen::Index>(i)) =
        gt.value(landing) + noise_sd * rng.normal();
  }

  const GpPosterior post =
      gp_posterior(out.landings, out.measurements, scenario.noise,
                   scenario.kernel, scenario.pois);
  out.poi_predictions = post.mean;
  out.poi_truth.resize(static_cast<Eigen::Index>(scenario.pois.size()));
  for (std::size_t i = 0; i < scenario.pois.size(); ++i) {
    out.poi_truth(static_cast<Eigen::Index>(i)) = gt.value(scenario.pois[i]);
  }
  KahanSum sse;
  for (Eigen::Index i = 0; i < out.poi_truth.size(); ++i) {
    const double d = out.poi_predictions(i) - out.poi_truth(i);
    sse.add(d * d);
  }
  out.sse = sse.value();
  out.mse = out.sse / static_cast<double>(scenario.pois.size());
  return out;
}

EvalReport monte_carlo_eval(std::span<const Plan> plans,
                            const Scenario& scenario, const GroundTruth& gt,
                            int n_trials, std::uint64_t master_seed,
                            int threads, const std::string& scenario_digest) {
  if (n_trials < 1) throw ValidationError("eval needs at least one trial");
  scenario.validate();
  gt.validate();

  const std::size_t np = plans.size();
  const std::size_t nt = static_cast<std::size_t>(n_trials);
  std::vector<TrialResult> results(np * nt);
  parallel_for(np * nt, threads, [&](std::size_t idx) {
    const std::size_t p = idx / nt;
    const std::size_t t = idx % nt;
    const std::uint64_t trial_seed =
        derive_seed(master_seed, static_cast<std::uint64_t>(t));
    results[idx] = run_trial(plans[p], scenario, gt, trial_seed);
  });

  EvalReport report;
  report.n_trials = n_trials;
  report.master_seed = master_seed;
  report.scenario_digest = scenario_digest;
  const Eigen::Index n_pois = static_cast<Eigen::Index>(scenario.pois.size());
  for (std::size_t p = 0; p < np; ++p) {
    PlannerStats stats;
    stats.planner = plans[p].planner_name;
    KahanSum mse_sum, sse_sum;
    std::vector<KahanSum> poi_sq(static_cast<std::size_t>(n_pois));
    for (std::size_t t = 0; t < nt; ++t) {
      const TrialResult& r = results[p * nt + t];
      mse_sum.add(r.mse);
      sse_sum.add(r.sse);
      for (Eigen::Index i = 0; i < n_pois; ++i) {
        const double d = r.poi_predictions(i) - r.poi_truth(i);
        poi_sq[static_cast<std::size_t>(i)].add(d * d);
      }
      report.rows.push_back({static_cast<int>(t), plans[p].planner_name,
                             r.sse, r.mse,
                             static_cast<int>(r.landings.size()),
                             derive_seed(master_seed,
                                         static_cast<std::uint64_t>(t))});
    }
    stats.mean_mse = mse_sum.value() / static_cast<double>(nt);
    stats.mean_sse = sse_sum.value() / static_cast<double>(nt);
    KahanSum var_sum;
    for (std::size_t t = 0; t < nt; ++t) {
      const double d = results[p * nt + t].mse - stats.mean_mse;
      var_sum.add(d * d);
    }
    stats.std_mse =
        nt > 1 ? std::sqrt(var_sum.value() / static_cast<double>(nt - 1)) : 0.0;
    stats.mean_mi = plans[p].objective_value;
    stats.mean_wall_time = plans[p].wall_time;
    for (Eigen::Index i = 0; i < n_pois; ++i) {
      stats.mean_poi_sq_error.push_back(
          poi_sq[static_cast<std::size_t>(i)].value() /
          static_cast<double>(nt));
    }
    report.per_planner.push_back(std::move(stats));
  }
  return report;
}

std::vector<BenchRow> bench_runtime(const Scenario& scenario_template,
                                    std::span<const int> sensors_per_uav,
                                    int threads,
                                    const BruteForceLimits& limits) {
  scenario_template.validate();
  std::vector<BenchRow> rows;
  for (int k : sensors_per_uav) {
    Scenario s = scenario_template;
    for (auto& uav : s.uavs) uav.sensors = k;
    const Plan greedy = sga(s, threads);
    rows.push_back({k, "sga", greedy.wall_time, false});
    try {
      const Plan exact = brute_force(s, limits);
      rows.push_back({k, "oracle", exact.wall_time, false});
    } catch (const CapabilityRefusal&) {
      rows.push_back({k, "oracle", 0.0, true});
    }
  }
  return rows;
}

}  // namespace airdrop
