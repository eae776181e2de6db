#pragma once

// Independent reference implementations used as test oracles. These
// deliberately avoid the library's own code paths wherever the library
// computes the same quantity.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <vector>

#include <Eigen/Dense>

#include "airdrop/gp.hpp"
#include "airdrop/rng.hpp"
#include "airdrop/world.hpp"

namespace airdrop::testing {

/// Monte Carlo estimate of E[k(x_a, x_b)] with x_a, x_b drawn independently
/// from the two location distributions.
inline double mc_expected_cov(const UncertainLocation& a,
                              const UncertainLocation& b,
                              const KernelParams& kernel, int n_samples,
                              std::uint64_t seed) {
  Rng rng(seed);
  const Eigen::Matrix2d ra = [&] {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(a.covariance);
    return Eigen::Matrix2d(eig.eigenvectors() *
                           eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                           eig.eigenvectors().transpose());
  }();
  const Eigen::Matrix2d rb = [&] {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(b.covariance);
    return Eigen::Matrix2d(eig.eigenvectors() *
                           eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                           eig.eigenvectors().transpose());
  }();
  double sum = 0.0;
  double comp = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const Eigen::Vector2d xa =
        a.mean + ra * Eigen::Vector2d{rng.normal(), rng.normal()};
    const Eigen::Vector2d xb =
        b.mean + rb * Eigen::Vector2d{rng.normal(), rng.normal()};
    const Eigen::Vector2d d = xa - xb;
    double quad = 0.0;
    for (int k = 0; k < 2; ++k) {
      quad += d(k) * d(k) /
              (kernel.length_scales(k) * kernel.length_scales(k));
    }
    const double val = kernel.signal_variance * std::exp(-0.5 * quad);
    const double y = val - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum / n_samples;
}

/// All-pairs shortest paths by Dijkstra from every source; independent of
/// the Floyd-Warshall closure in the library.
inline Eigen::MatrixXd dijkstra_apsp(const WorldGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const auto& e : g.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.weight});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.weight});
  }
  Eigen::MatrixXd dist = Eigen::MatrixXd::Constant(
      n, n, std::numeric_limits<double>::infinity());
  for (int src = 0; src < n; ++src) {
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist(src, src) = 0.0;
    heap.push({0.0, src});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d > dist(src, u)) continue;
      for (const auto& [v, w] : adj[static_cast<std::size_t>(u)]) {
        const double nd = d + w;
        if (nd < dist(src, v)) {
          dist(src, v) = nd;
          heap.push({nd, v});
        }
      }
    }
  }
  return dist;
}

/// Brute-force optimal closed tour length over all permutations.
inline double brute_tour_length(const std::vector<VertexId>& selected,
                                VertexId depot, const CompleteGraph& g) {
  if (selected.empty()) return 0.0;
  std::vector<VertexId> order = selected;
  std::sort(order.begin(), order.end());
  double best = std::numeric_limits<double>::infinity();
  do {
    double len = g.weight(depot, order.front());
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      len += g.weight(order[i], order[i + 1]);
    }
    len += g.weight(order.back(), depot);
    best = std::min(best, len);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Closed tour length of an explicit vertex sequence.
inline double tour_length(const std::vector<VertexId>& tour,
                          const CompleteGraph& g) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < tour.size(); ++i) {
    len += g.weight(tour[i], tour[i + 1]);
  }
  return len;
}

}  // namespace airdrop::testing
