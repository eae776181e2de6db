#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "airdrop/world.hpp"

namespace airdrop {

struct UavSpec {
  VertexId depot = 0;
  double budget = 0.0;  // T_i, travel time units
  int sensors = 0;      // k_i
};

/// Full problem instance: graph with landing distributions, points of
/// interest, GP hyperparameters, per-UAV limits and the drop time eta.
struct Scenario {
  WorldGraph graph;
  std::vector<Eigen::Vector2d> pois;
  KernelParams kernel;
  NoiseParams noise;
  std::vector<UavSpec> uavs;
  double eta = 0.0;

  void validate() const;
};

/// One path per UAV plus the surrogate objective value the drop set attains.
struct Plan {
  std::vector<RoutePath> paths;
  double objective_value = 0.0;
  std::string planner_name;
  double wall_time = 0.0;  // seconds

  /// Drop vertices of all paths, in path order.
  std::vector<VertexId> drop_union() const;
};

/// Surrogate objective: mutual information between the PoIs and sensors
/// dropped at `drop_set`, using each vertex's landing distribution. Pure in
/// the set (order and duplicates do not matter).
double objective(const Scenario& scenario,
                 const std::vector<VertexId>& drop_set);

using ObjectiveOracle = std::function<double(const std::vector<VertexId>&)>;

/// Generalized cost-benefit greedy for one UAV. Grows the selected set from
/// the depot by the best marginal-gain / marginal-cost ratio, where the cost
/// of a set is its heuristic TSP tour length plus eta per drop. A vertex is
/// accepted only while the tour stays within `budget` and fewer than
/// `sensors` drops were accepted; rejected candidates leave the pool either
/// way. `committed` holds drop vertices already claimed by previous UAVs:
/// they contribute to the objective but not to this UAV's cost or pool.
RoutePath gcb(const std::vector<VertexId>& committed, double budget,
              const CompleteGraph& g, const ObjectiveOracle& oracle,
              VertexId depot, int sensors, double eta, int threads = 1);

/// Sequential greedy assignment: metric-completes the graph once, then runs
/// gcb per UAV in index order, each conditioning on the union of its
/// predecessors' drops.
Plan sga(const Scenario& scenario, int threads = 1);

/// sga with landing covariances zeroed inside the objective only; the
/// returned objective_value is re-evaluated with the true covariances so
/// plans stay comparable.
Plan baseline_deterministic(const Scenario& scenario, int threads = 1);

/// Per UAV, uniformly picks untried vertices and keeps those whose tour cost
/// stays within budget, until the sensor count is reached or the pool runs
/// out.
Plan baseline_random(const Scenario& scenario, std::uint64_t seed);

struct BruteForceLimits {
  int max_subset_size = 8;              // exact-TSP permutation bound
  std::uint64_t max_assignments = 50000;  // enumeration guard
};

/// Exhaustive search over assignments of disjoint vertex subsets to UAVs
/// (|subset_i| <= k_i), feasibility checked with exact TSP tours. Exact
/// optimum of the surrogate objective under exact tour costs. Throws
/// CapabilityRefusal with a size report when the instance exceeds the
/// guard.
Plan brute_force(const Scenario& scenario, const BruteForceLimits& limits = {});

}  // namespace airdrop
