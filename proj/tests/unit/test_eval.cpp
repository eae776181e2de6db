#include <doctest.h>

#include <cmath>
#include <vector>

#include "airdrop/eval.hpp"
#include "airdrop/errors.hpp"
#include "airdrop/rng.hpp"
#include "instances.hpp"

using namespace airdrop;
using namespace airdrop::testing;

namespace {

GroundTruth single_bump(double cx, double cy, double amp, double width) {
  GroundTruth gt;
  gt.components.push_back({{cx, cy}, amp, width});
  return gt;
}

/// Scenario with one drop vertex sitting exactly on the single PoI.
Scenario pinpoint_scenario() {
  Scenario s;
  for (int i = 0; i < 2; ++i) {
    DropNode node;
    node.id = i;
    node.position = {50.0 * i, 0.0, 100.0};
    node.landing.mean = {50.0 * i, 0.0};
    s.graph.vertices.push_back(node);
  }
  s.graph.edges.push_back({0, 1, 50.0});
  s.pois = {{50.0, 0.0}};
  s.kernel.signal_variance = 1.0;
  s.kernel.length_scales = {20.0, 20.0};
  s.noise.measurement_variance = 1e-12;
  s.uavs.push_back({0, 200.0, 1});
  s.graph.depots = {0};
  return s;
}

Plan manual_plan(const std::vector<std::vector<VertexId>>& tours,
                 const Scenario& s) {
  Plan plan;
  plan.planner_name = "manual";
  for (std::size_t i = 0; i < tours.size(); ++i) {
    RoutePath p;
    p.uav_index = static_cast<int>(i);
    p.vertices = tours[i];
    p.drops = p.interior();
    plan.paths.push_back(p);
  }
  plan.objective_value = objective(s, plan.drop_union());
  return plan;
}

}  // namespace

TEST_CASE("ground truth evaluates the Gaussian mixture") {
  const GroundTruth lone = single_bump(10.0, 20.0, 0.8, 15.0);
  CHECK(lone.value({10.0, 20.0}) == doctest::Approx(0.8).epsilon(1e-15));
  // Ten widths away the bump is numerically dead.
  CHECK(std::abs(lone.value({10.0 + 150.0, 20.0})) < 0.8 * std::exp(-49.0));

  GroundTruth twin;
  twin.components.push_back({{-30.0, 0.0}, 0.5, 20.0});
  twin.components.push_back({{30.0, 0.0}, 0.5, 20.0});
  const Eigen::Vector2d midpoint{0.0, 0.0};
  const GroundTruth half = single_bump(-30.0, 0.0, 0.5, 20.0);
  CHECK(twin.value(midpoint) ==
        doctest::Approx(2.0 * half.value(midpoint)).epsilon(1e-12));

  GroundTruth empty;
  CHECK_THROWS_AS(empty.validate(), ValidationError);
}

TEST_CASE("a trial with no drops predicts the prior mean") {
  Scenario s = pinpoint_scenario();
  const GroundTruth gt = single_bump(50.0, 0.0, 1.0, 25.0);
  const Plan plan = manual_plan({{0, 0}}, s);
  const TrialResult r = run_trial(plan, s, gt, 123);
  CHECK(r.landings.empty());
  CHECK(r.poi_predictions.isZero(0.0));
  double truth_sq = 0.0;
  for (Eigen::Index i = 0; i < r.poi_truth.size(); ++i) {
    truth_sq += r.poi_truth(i) * r.poi_truth(i);
  }
  CHECK(r.sse == doctest::Approx(truth_sq).epsilon(1e-15));
  CHECK(r.mse == r.sse / 1.0);
}

TEST_CASE("a noiseless pinpoint drop nails the PoI") {
  Scenario s = pinpoint_scenario();
  const GroundTruth gt = single_bump(40.0, 10.0, 1.0, 30.0);
  const Plan plan = manual_plan({{0, 1, 0}}, s);
  const TrialResult r = run_trial(plan, s, gt, 9);
  REQUIRE(r.landings.size() == 1);
  CHECK(r.landings[0] == Eigen::Vector2d{50.0, 0.0});
  CHECK(r.mse < 1e-6);
}

TEST_CASE("trials are deterministic in the seed") {
  Rng rng(71);
  const Scenario s = random_scenario(rng, 8, 2, 3, 1.5);
  GroundTruth gt = single_bump(50.0, 50.0, 1.0, 40.0);
  gt.components.push_back({{20.0, 80.0}, 0.6, 25.0});
  const Plan plan = sga(s);
  const TrialResult a = run_trial(plan, s, gt, 77);
  const TrialResult b = run_trial(plan, s, gt, 77);
  CHECK(a.sse == b.sse);
  CHECK(a.mse == b.mse);
  CHECK(a.measurements == b.measurements);
  const TrialResult c = run_trial(plan, s, gt, 78);
  CHECK(a.sse != c.sse);
  CHECK(a.mse == doctest::Approx(a.sse / s.pois.size()).epsilon(1e-15));
}

TEST_CASE("paired evaluation gives identical stats to identical plans") {
  Rng rng(72);
  const Scenario s = random_scenario(rng, 8, 2, 2, 1.5);
  const GroundTruth gt = single_bump(50.0, 50.0, 1.0, 40.0);
  const Plan plan = sga(s);
  const std::vector<Plan> plans{plan, plan};
  const EvalReport report = monte_carlo_eval(plans, s, gt, 10, 5);
  REQUIRE(report.per_planner.size() == 2);
  CHECK(report.per_planner[0].mean_mse == report.per_planner[1].mean_mse);
  CHECK(report.per_planner[0].std_mse == report.per_planner[1].std_mse);
  CHECK(report.rows.size() == 20);

  // Single plan, single trial: the report collapses to that trial.
  const EvalReport single = monte_carlo_eval({&plan, 1}, s, gt, 1, 5);
  const TrialResult direct = run_trial(plan, s, gt, derive_seed(5, 0));
  CHECK(single.per_planner[0].mean_mse == direct.mse);
  CHECK(single.per_planner[0].std_mse == 0.0);
  CHECK(single.n_trials == 1);
}

TEST_CASE("evaluation reports are reproducible and thread-invariant") {
  Rng rng(73);
  const Scenario s = random_scenario(rng, 8, 2, 2, 1.5);
  const GroundTruth gt = single_bump(40.0, 60.0, 1.0, 35.0);
  const std::vector<Plan> plans{sga(s), baseline_random(s, 3)};
  const EvalReport a = monte_carlo_eval(plans, s, gt, 20, 11, 1);
  const EvalReport b = monte_carlo_eval(plans, s, gt, 20, 11, 4);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].mse == b.rows[i].mse);
    CHECK(a.rows[i].sse == b.rows[i].sse);
  }
  CHECK(a.per_planner[0].mean_mse == b.per_planner[0].mean_mse);
  for (const auto& row : a.rows) {
    CHECK(row.mse >= 0.0);
    CHECK(row.mse == doctest::Approx(row.sse / s.pois.size()).epsilon(1e-15));
  }
}

TEST_CASE("an extra sensor does not hurt the mean MSE beyond noise") {
  // Soft property: MSE is stochastic, so this is logged, not asserted.
  Rng rng(74);
  Scenario s = random_scenario(rng, 8, 1, 2, 3.0);
  s.uavs[0].budget = 1e4;
  const GroundTruth gt = single_bump(50.0, 50.0, 1.0, 40.0);
  const Plan small = sga(s);

  Scenario bigger = s;
  bigger.uavs[0].sensors = 3;
  const Plan large = sga(bigger);

  const int trials = 100;
  std::vector<double> diff(trials);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = derive_seed(321, t);
    diff[static_cast<std::size_t>(t)] =
        run_trial(small, s, gt, seed).mse - run_trial(large, bigger, gt, seed).mse;
  }
  Rng boot(75);
  int favorable = 0;
  const int resamples = 1000;
  for (int r = 0; r < resamples; ++r) {
    double mean = 0.0;
    for (int t = 0; t < trials; ++t) {
      mean += diff[static_cast<std::size_t>(boot.uniform_int(trials))];
    }
    if (mean >= 0.0) ++favorable;
  }
  MESSAGE("extra-sensor bootstrap: mean MSE improvement favorable in ",
          favorable, "/", resamples, " resamples");
  CHECK(trials == 100);
}

TEST_CASE("bench_runtime rows and refusals") {
  Rng rng(76);
  const Scenario s = random_scenario(rng, 6, 2, 2, 1.5);
  const std::vector<int> ks{1};
  const auto rows = bench_runtime(s, ks);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].planner == "sga");
  CHECK(rows[0].sensors_per_uav == 1);
  CHECK_FALSE(rows[0].refused);
  CHECK(rows[1].planner == "oracle");
  CHECK_FALSE(rows[1].refused);

  const Scenario big = random_scenario(rng, 14, 2, 2, 1.5);
  const std::vector<int> bigk{4};
  const auto rows_big = bench_runtime(big, bigk);
  REQUIRE(rows_big.size() == 2);
  CHECK(rows_big[1].planner == "oracle");
  CHECK(rows_big[1].refused);
}
