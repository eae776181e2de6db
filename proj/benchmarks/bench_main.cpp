#include <benchmark/benchmark.h>

#include <vector>

#include "airdrop/dropsim.hpp"
#include "airdrop/eval.hpp"
#include "airdrop/gp.hpp"
#include "airdrop/planner.hpp"
#include "airdrop/rng.hpp"
#include "airdrop/scenario_io.hpp"

namespace {

using namespace airdrop;

KernelParams bench_kernel() {
  KernelParams k;
  k.signal_variance = 1.0;
  k.length_scales = {20.0, 20.0};
  return k;
}

std::vector<UncertainLocation> bench_drops(int n) {
  Rng rng(17);
  std::vector<UncertainLocation> drops;
  for (int i = 0; i < n; ++i) {
    UncertainLocation loc;
    loc.mean = {200.0 * rng.uniform(), 200.0 * rng.uniform()};
    loc.covariance = 900.0 * Eigen::Matrix2d::Identity();
    drops.push_back(loc);
  }
  return drops;
}

std::vector<Eigen::Vector2d> bench_pois(int n) {
  Rng rng(18);
  std::vector<Eigen::Vector2d> pois;
  for (int i = 0; i < n; ++i) {
    pois.push_back({200.0 * rng.uniform(), 200.0 * rng.uniform()});
  }
  return pois;
}

void BM_expected_cov_entry(benchmark::State& state) {
  const auto k = bench_kernel();
  const auto drops = bench_drops(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        expected_cov_entry(drops[0], drops[1], false, k));
  }
}
BENCHMARK(BM_expected_cov_entry);

void BM_mutual_information(benchmark::State& state) {
  const auto k = bench_kernel();
  NoiseParams n;
  n.measurement_variance = 0.05;
  n.jitter = 1e-8;
  const auto pois = bench_pois(12);
  const auto drops = bench_drops(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mutual_information(pois, drops, k, n));
  }
}
BENCHMARK(BM_mutual_information)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_gp_posterior(benchmark::State& state) {
  const auto k = bench_kernel();
  NoiseParams n;
  n.measurement_variance = 0.05;
  const auto pois = bench_pois(12);
  const int nt = static_cast<int>(state.range(0));
  const auto drops = bench_drops(nt);
  std::vector<Eigen::Vector2d> train;
  for (const auto& d : drops) train.push_back(d.mean);
  Eigen::VectorXd obs = Eigen::VectorXd::LinSpaced(nt, 0.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gp_posterior(train, obs, n, k, pois));
  }
}
BENCHMARK(BM_gp_posterior)->Arg(4)->Arg(8);

void BM_metric_completion(benchmark::State& state) {
  const auto bundle =
      parse_scenario_text(make_scenario_template("scenario1", 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(metric_completion(bundle.scenario.graph));
  }
}
BENCHMARK(BM_metric_completion);

void BM_tsp_tour(benchmark::State& state) {
  const auto bundle =
      parse_scenario_text(make_scenario_template("scenario1", 1));
  const CompleteGraph gc = metric_completion(bundle.scenario.graph);
  std::vector<VertexId> selected{3, 7, 11, 16, 21, 23, 14, 9};
  selected.resize(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsp_tour(selected, 0, gc));
  }
}
BENCHMARK(BM_tsp_tour)->Arg(4)->Arg(8);

void BM_sga_scenario1(benchmark::State& state) {
  const auto bundle =
      parse_scenario_text(make_scenario_template("scenario1", 1));
  Scenario s = bundle.scenario;
  for (auto& uav : s.uavs) uav.sensors = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sga(s));
  }
}
BENCHMARK(BM_sga_scenario1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_simulate_descent(benchmark::State& state) {
  WindField f;
  f.origin = {0.0, 0.0};
  f.cell_size = 50.0;
  f.nx = 6;
  f.ny = 6;
  for (int i = 0; i < 36; ++i) f.values.push_back({2.0, 1.0});
  f.gust_std = 15.0;
  SensorBody body;
  Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_descent({100.0, 100.0, 500.0}, f, body, 0.05, &rng));
  }
}
BENCHMARK(BM_simulate_descent);

void BM_run_trial(benchmark::State& state) {
  const auto bundle =
      parse_scenario_text(make_scenario_template("scenario1", 1));
  const Plan plan = sga(bundle.scenario);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_trial(plan, bundle.scenario, bundle.ground_truth, ++seed));
  }
}
BENCHMARK(BM_run_trial);

}  // namespace

BENCHMARK_MAIN();
