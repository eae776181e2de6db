#include "airdrop/planner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "airdrop/errors.hpp"
#include "airdrop/rng.hpp"
#include "airdrop/util.hpp"

namespace airdrop {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<VertexId> sorted_unique(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

/// MI of a drop set against the scenario PoIs with caller-supplied landing
/// distributions (lets the deterministic baseline zero the covariances).
double objective_with_landings(const Scenario& s,
                               const std::vector<UncertainLocation>& landings,
                               const std::vector<VertexId>& drop_set) {
  const int n = static_cast<int>(landings.size());
  std::vector<UncertainLocation> drops;
  drops.reserve(drop_set.size());
  for (VertexId v : sorted_unique(drop_set)) {
    if (v < 0 || v >= n) {
      throw ValidationError("objective: unknown vertex id " +
                            std::to_string(v));
    }
    drops.push_back(landings[static_cast<std::size_t>(v)]);
  }
  return mutual_information(s.pois, drops, s.kernel, s.noise);
}

std::vector<UncertainLocation> true_landings(const Scenario& s) {
  std::vector<UncertainLocation> out;
  out.reserve(s.graph.vertices.size());
  for (const auto& v : s.graph.vertices) out.push_back(v.landing);
  return out;
}

/// Heuristic set cost used by GCB: TSP tour length plus eta per drop.
double set_cost(const std::vector<VertexId>& selected, VertexId depot,
                const CompleteGraph& g, double eta) {
  const auto tour = tsp_tour(selected, depot, g);
  KahanSum len;
  for (std::size_t i = 0; i + 1 < tour.size(); ++i) {
    len.add(g.weight(tour[i], tour[i + 1]));
  }
  return len.value() + eta * static_cast<double>(selected.size());
}

void require_feasible(const Plan& plan, const Scenario& s,
                      const CompleteGraph& g) {
  for (std::size_t i = 0; i < plan.paths.size(); ++i) {
    const auto& uav = s.uavs[i];
    const auto violations = validate_path(plan.paths[i], g, uav.depot,
                                          uav.budget, uav.sensors, s.eta);
    if (!violations.empty()) {
      throw NumericError("planner produced an infeasible path for UAV " +
                         std::to_string(i) + ": " + violations.front().message);
    }
  }
}

Plan greedy_plan(const Scenario& s, int threads,
                 const std::vector<UncertainLocation>& planning_landings,
                 const std::string& name) {
  const auto start = Clock::now();
  s.validate();
  const CompleteGraph gc = metric_completion(s.graph);
  const ObjectiveOracle oracle = [&](const std::vector<VertexId>& set) {
    return objective_with_landings(s, planning_landings, set);
  };
  Plan plan;
  plan.planner_name = name;
  std::vector<VertexId> committed;
  for (std::size_t j = 0; j < s.uavs.size(); ++j) {
    const auto& uav = s.uavs[j];
    RoutePath path = gcb(committed, uav.budget, gc, oracle, uav.depot,
                         uav.sensors, s.eta, threads);
    path.uav_index = static_cast<int>(j);
    for (VertexId v : path.drops) committed.push_back(v);
    committed = sorted_unique(std::move(committed));
    plan.paths.push_back(std::move(path));
  }
  // Reported value always uses the true landing distributions.
  plan.objective_value = objective(s, committed);
  require_feasible(plan, s, gc);
  plan.wall_time = seconds_since(start);
  return plan;
}

}  // namespace

void Scenario::validate() const {
  graph.validate();
  if (pois.empty()) throw ValidationError("scenario needs at least one PoI");
  for (std::size_t i = 0; i < pois.size(); ++i) {
    if (!pois[i].allFinite()) {
      throw ValidationError("pois[" + std::to_string(i) + "] is not finite");
    }
  }
  kernel.validate();
  noise.validate(kernel);
  if (uavs.empty()) throw ValidationError("scenario needs at least one UAV");
  const int n = static_cast<int>(graph.vertices.size());
  for (std::size_t i = 0; i < uavs.size(); ++i) {
    const auto& u = uavs[i];
    if (u.depot < 0 || u.depot >= n) {
      throw ValidationError("uavs[" + std::to_string(i) +
                            "].depot is not a vertex");
    }
    if (!(u.budget > 0.0) || !std::isfinite(u.budget)) {
      throw ValidationError("uavs[" + std::to_string(i) +
                            "].budget must be > 0");
    }
    if (u.sensors < 0) {
      throw ValidationError("uavs[" + std::to_string(i) +
                            "].sensors must be >= 0");
    }
  }
  if (graph.depots.size() != uavs.size()) {
    throw ValidationError("graph.depots must list one depot per UAV");
  }
  for (std::size_t i = 0; i < uavs.size(); ++i) {
    if (graph.depots[i] != uavs[i].depot) {
      throw ValidationError("graph.depots[" + std::to_string(i) +
                            "] disagrees with uavs[" + std::to_string(i) +
                            "].depot");
    }
  }
  if (eta < 0.0 || !std::isfinite(eta)) {
    throw ValidationError("eta must be >= 0");
  }
}

std::vector<VertexId> Plan::drop_union() const {
  std::vector<VertexId> out;
  for (const auto& p : paths) {
    out.insert(out.end(), p.drops.begin(), p.drops.end());
  }
  return out;
}

double objective(const Scenario& scenario,
                 const std::vector<VertexId>& drop_set) {
  return objective_with_landings(scenario, true_landings(scenario), drop_set);
}

RoutePath gcb(const std::vector<VertexId>& committed, double budget,
              const CompleteGraph& g, const ObjectiveOracle& oracle,
              VertexId depot, int sensors, double eta, int threads) {
  g.vertex(depot);  // throws on a missing depot
  const std::vector<VertexId> base = sorted_unique(committed);

  std::vector<VertexId> pool;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (v == depot) continue;
    if (std::binary_search(base.begin(), base.end(), v)) continue;
    pool.push_back(v);
  }

  std::vector<VertexId> selected;
  int remaining = sensors;
  double cur_obj = oracle(base);
  double cur_cost = 0.0;  // C({depot}) = empty tour

  auto with = [](std::vector<VertexId> set, VertexId v) {
    set.push_back(v);
    return set;
  };

  while (!pool.empty() && remaining > 0) {
    const std::size_t m = pool.size();
    std::vector<double> value(m);
    std::vector<double> cost(m);
    std::vector<VertexId> joint = base;
    joint.insert(joint.end(), selected.begin(), selected.end());
    parallel_for(m, threads, [&](std::size_t i) {
      value[i] = oracle(with(joint, pool[i]));
    });
    for (std::size_t i = 0; i < m; ++i) {
      cost[i] = set_cost(with(selected, pool[i]), depot, g, eta);
    }
    // argmax of gain/cost ratio; ascending pool order breaks ties toward
    // the smallest vertex id.
    std::size_t best = 0;
    double best_ratio = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      double delta_c = cost[i] - cur_cost;
      delta_c = std::max(delta_c, 1e-6 * budget);
      if (delta_c <= 0.0) delta_c = std::numeric_limits<double>::min();
      const double ratio = (value[i] - cur_obj) / delta_c;
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best = i;
      }
    }
    if (cost[best] <= budget) {
      selected.push_back(pool[best]);
      std::sort(selected.begin(), selected.end());
      cur_obj = value[best];
      cur_cost = cost[best];
      --remaining;
    }
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
  }

  RoutePath path;
  path.vertices = tsp_tour(selected, depot, g);
  path.drops = path.interior();
  return path;
}

Plan sga(const Scenario& scenario, int threads) {
  Plan plan = greedy_plan(scenario, threads, true_landings(scenario), "sga");
  return plan;
}

Plan baseline_deterministic(const Scenario& scenario, int threads) {
  std::vector<UncertainLocation> landings = true_landings(scenario);
  for (auto& l : landings) l.covariance.setZero();
  return greedy_plan(scenario, threads, landings, "baseline");
}

Plan baseline_random(const Scenario& scenario, std::uint64_t seed) {
  const auto start = Clock::now();
  scenario.validate();
  const CompleteGraph gc = metric_completion(scenario.graph);
  Plan plan;
  plan.planner_name = "random";
  std::set<VertexId> taken;
  for (std::size_t j = 0; j < scenario.uavs.size(); ++j) {
    const auto& uav = scenario.uavs[j];
    Rng rng(derive_seed(seed, j));
    std::vector<VertexId> pool;
    for (VertexId v = 0; v < gc.size(); ++v) {
      if (v != uav.depot && taken.find(v) == taken.end()) pool.push_back(v);
    }
    std::vector<VertexId> selected;
    while (static_cast<int>(selected.size()) < uav.sensors && !pool.empty()) {
      const int pick = rng.uniform_int(static_cast<int>(pool.size()));
      const VertexId v = pool[static_cast<std::size_t>(pick)];
      pool.erase(pool.begin() + pick);
      std::vector<VertexId> trial = selected;
      trial.push_back(v);
      if (set_cost(trial, uav.depot, gc, scenario.eta) <= uav.budget) {
        selected.push_back(v);
        taken.insert(v);
      }
    }
    RoutePath path;
    path.uav_index = static_cast<int>(j);
    path.vertices = tsp_tour(selected, uav.depot, gc);
    path.drops = path.interior();
    plan.paths.push_back(std::move(path));
  }
  plan.objective_value = objective(scenario, plan.drop_union());
  require_feasible(plan, scenario, gc);
  plan.wall_time = seconds_since(start);
  return plan;
}

namespace {

/// Counts the assignments brute force would enumerate, bailing out once the
/// count passes `cap`.
std::uint64_t count_assignments(int available, const std::vector<UavSpec>& uavs,
                                std::size_t idx, std::uint64_t cap) {
  if (idx == uavs.size()) return 1;
  std::uint64_t total = 0;
  const int k = std::min(uavs[idx].sensors, available);
  for (int s = 0; s <= k; ++s) {
    // C(available, s)
    std::uint64_t comb = 1;
    for (int i = 0; i < s; ++i) {
      comb = comb * static_cast<std::uint64_t>(available - i) /
             static_cast<std::uint64_t>(i + 1);
      if (comb > cap) return cap + 1;
    }
    const std::uint64_t rest =
        count_assignments(available - s, uavs, idx + 1, cap);
    if (comb > 0 && rest > cap / comb) return cap + 1;
    total += comb * rest;
    if (total > cap) return cap + 1;
  }
  return total;
}

struct BruteForceState {
  const Scenario* scenario = nullptr;
  const CompleteGraph* graph = nullptr;
  const BruteForceLimits* limits = nullptr;
  std::vector<std::vector<VertexId>> current;
  std::vector<std::vector<VertexId>> best;
  double best_value = -1.0;
};

void enumerate_uav(BruteForceState& st, std::size_t uav_idx,
                   std::vector<VertexId> available) {
  const Scenario& s = *st.scenario;
  if (uav_idx == s.uavs.size()) {
    std::vector<VertexId> all;
    for (const auto& subset : st.current) {
      all.insert(all.end(), subset.begin(), subset.end());
    }
    const double value = objective(s, all);
    if (value > st.best_value) {
      st.best_value = value;
      st.best = st.current;
    }
    return;
  }
  const auto& uav = s.uavs[uav_idx];
  std::vector<VertexId> pool;
  for (VertexId v : available) {
    if (v != uav.depot) pool.push_back(v);
  }
  const int k = std::min(uav.sensors, static_cast<int>(pool.size()));
  std::vector<int> pick;
  // Subsets in size order, lexicographic within a size; deterministic.
  const auto recurse_subset = [&](auto&& self, int size, int start) -> void {
    if (static_cast<int>(pick.size()) == size) {
      std::vector<VertexId> subset;
      subset.reserve(pick.size());
      for (int i : pick) subset.push_back(pool[static_cast<std::size_t>(i)]);
      const double cost =
          exact_tsp_length(subset, uav.depot, *st.graph,
                           st.limits->max_subset_size) +
          s.eta * static_cast<double>(subset.size());
      if (cost <= uav.budget) {
        std::vector<VertexId> next_available;
        for (VertexId v : available) {
          if (std::find(subset.begin(), subset.end(), v) == subset.end()) {
            next_available.push_back(v);
          }
        }
        st.current.push_back(subset);
        enumerate_uav(st, uav_idx + 1, std::move(next_available));
        st.current.pop_back();
      }
      return;
    }
    for (int i = start; i < static_cast<int>(pool.size()); ++i) {
      pick.push_back(i);
      self(self, size, i + 1);
      pick.pop_back();
    }
  };
  for (int size = 0; size <= k; ++size) {
    recurse_subset(recurse_subset, size, 0);
  }
}

}  // namespace

Plan brute_force(const Scenario& scenario, const BruteForceLimits& limits) {
  const auto start = Clock::now();
  scenario.validate();
  for (std::size_t i = 0; i < scenario.uavs.size(); ++i) {
    if (scenario.uavs[i].sensors > limits.max_subset_size) {
      throw CapabilityRefusal(
          "brute force limited to " + std::to_string(limits.max_subset_size) +
          " sensors per UAV; uavs[" + std::to_string(i) + "] carries " +
          std::to_string(scenario.uavs[i].sensors));
    }
  }
  const int n = static_cast<int>(scenario.graph.vertices.size());
  const std::uint64_t count = count_assignments(
      n - 1, scenario.uavs, 0, limits.max_assignments);
  if (count > limits.max_assignments) {
    throw CapabilityRefusal(
        "brute force refused: " + std::to_string(n) + " vertices with the "
        "requested sensor counts need more than " +
        std::to_string(limits.max_assignments) +
        " subset assignments to enumerate");
  }

  const CompleteGraph gc = metric_completion(scenario.graph);
  BruteForceState st;
  st.scenario = &scenario;
  st.graph = &gc;
  st.limits = &limits;
  std::vector<VertexId> available;
  for (VertexId v = 0; v < n; ++v) available.push_back(v);
  enumerate_uav(st, 0, std::move(available));

  Plan plan;
  plan.planner_name = "oracle";
  for (std::size_t j = 0; j < scenario.uavs.size(); ++j) {
    RoutePath path;
    path.uav_index = static_cast<int>(j);
    path.vertices = exact_tsp_tour(st.best[j], scenario.uavs[j].depot, gc,
                                   limits.max_subset_size);
    path.drops = path.interior();
    plan.paths.push_back(std::move(path));
  }
  plan.objective_value = objective(scenario, plan.drop_union());
  require_feasible(plan, scenario, gc);
  plan.wall_time = seconds_since(start);
  return plan;
}

}  // namespace airdrop
