#include "airdrop/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "airdrop/errors.hpp"
#include "airdrop/util.hpp"

namespace airdrop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Floyd-Warshall followed by extra relaxation sweeps until the distance
/// matrix is a fixed point of d(u,v) <- min(d(u,v), d(u,x) + d(x,v)). The
/// fixed point makes every floating-point triangle inequality hold exactly.
Eigen::MatrixXd metric_closure_matrix(Eigen::MatrixXd d) {
  const Eigen::Index n = d.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index i = 0; i < n; ++i) {
        const double dik = d(i, k);
        if (dik == kInf) continue;
        for (Eigen::Index j = 0; j < n; ++j) {
          const double via = dik + d(k, j);
          if (via < d(i, j)) {
            d(i, j) = via;
            changed = true;
          }
        }
      }
    }
  }
  return d;
}

}  // namespace

void WorldGraph::validate() const {
  const int n = static_cast<int>(vertices.size());
  if (n == 0) throw ValidationError("graph has no vertices");
  for (int i = 0; i < n; ++i) {
    if (vertices[i].id != i) {
      throw ValidationError("graph vertex ids must be dense 0..N-1 (vertex " +
                            std::to_string(i) + " has id " +
                            std::to_string(vertices[i].id) + ")");
    }
    if (!(vertices[i].position(2) > 0.0)) {
      throw ValidationError("vertex " + std::to_string(i) +
                            " must have positive altitude");
    }
    vertices[i].landing.validate();
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    if (edge.u < 0 || edge.u >= n || edge.v < 0 || edge.v >= n) {
      throw ValidationError("edge " + std::to_string(e) +
                            " references an unknown vertex");
    }
    if (!(edge.weight >= 0.0) || !std::isfinite(edge.weight)) {
      throw ValidationError("edge " + std::to_string(e) +
                            " must have a nonnegative finite weight");
    }
  }
  for (std::size_t i = 0; i < depots.size(); ++i) {
    if (depots[i] < 0 || depots[i] >= n) {
      throw ValidationError("depot " + std::to_string(i) + " id " +
                            std::to_string(depots[i]) + " is not a vertex");
    }
  }
}

CompleteGraph::CompleteGraph(std::vector<DropNode> vertices,
                             Eigen::MatrixXd dist,
                             std::vector<VertexId> depots)
    : vertices_(std::move(vertices)),
      dist_(std::move(dist)),
      depots_(std::move(depots)) {}

const DropNode& CompleteGraph::vertex(VertexId v) const {
  if (v < 0 || v >= size()) {
    throw ValidationError("vertex id " + std::to_string(v) +
                          " is not in the graph");
  }
  return vertices_[static_cast<std::size_t>(v)];
}

double CompleteGraph::weight(VertexId u, VertexId v) const {
  if (u < 0 || u >= size() || v < 0 || v >= size()) {
    throw ValidationError("edge (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") is not in the graph");
  }
  return dist_(u, v);
}

CompleteGraph metric_completion(const WorldGraph& g) {
  g.validate();
  const Eigen::Index n = static_cast<Eigen::Index>(g.vertices.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, kInf);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = 0.0;
  for (const auto& e : g.edges) {
    d(e.u, e.v) = std::min(d(e.u, e.v), e.weight);
    d(e.v, e.u) = d(e.u, e.v);
  }
  d = metric_closure_matrix(std::move(d));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (d(i, j) == kInf) {
        throw ValidationError("graph is disconnected: vertex " +
                              std::to_string(j) + " is unreachable from " +
                              std::to_string(i));
      }
    }
  }
  return CompleteGraph(g.vertices, std::move(d), g.depots);
}

CompleteGraph metric_completion(const CompleteGraph& g) {
  return CompleteGraph(g.vertices(), metric_closure_matrix(g.weights()),
                       g.depots());
}

std::vector<VertexId> RoutePath::interior() const {
  if (vertices.size() <= 2) return {};
  return {vertices.begin() + 1, vertices.end() - 1};
}

double path_cost(const RoutePath& p, const CompleteGraph& g, double eta) {
  if (p.vertices.size() < 2) {
    throw ValidationError("path must contain at least the depot twice");
  }
  KahanSum length;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    length.add(g.weight(p.vertices[i], p.vertices[i + 1]));
  }
  return length.value() + static_cast<double>(p.drops.size()) * eta;
}

namespace {

double tour_length(const std::vector<VertexId>& tour, const CompleteGraph& g) {
  KahanSum sum;
  for (std::size_t i = 0; i + 1 < tour.size(); ++i) {
    sum.add(g.weight(tour[i], tour[i + 1]));
  }
  return sum.value();
}

}  // namespace

std::vector<VertexId> tsp_tour(const std::vector<VertexId>& selected,
                               VertexId depot, const CompleteGraph& g) {
  g.vertex(depot);
  for (VertexId v : selected) {
    g.vertex(v);
    if (v == depot) {
      throw ValidationError("tsp_tour: selected set must exclude the depot");
    }
  }
  if (selected.empty()) return {depot, depot};

  // Nearest neighbor from the depot, smallest id on ties.
  std::vector<VertexId> remaining = selected;
  std::sort(remaining.begin(), remaining.end());
  std::vector<VertexId> tour{depot};
  VertexId cur = depot;
  while (!remaining.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      if (g.weight(cur, remaining[i]) < g.weight(cur, remaining[best])) {
        best = i;
      }
    }
    cur = remaining[best];
    tour.push_back(cur);
    remaining.erase(remaining.begin() + best);
  }
  tour.push_back(depot);

  // 2-opt: reverse tour[i..j] while a strict improvement exists.
  const std::size_t n = tour.size();
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j + 1 < n; ++j) {
        const double before = g.weight(tour[i - 1], tour[i]) +
                              g.weight(tour[j], tour[j + 1]);
        const double after = g.weight(tour[i - 1], tour[j]) +
                             g.weight(tour[i], tour[j + 1]);
        if (after < before) {
          std::reverse(tour.begin() + i, tour.begin() + j + 1);
          improved = true;
        }
      }
    }
  }
  return tour;
}

std::vector<VertexId> exact_tsp_tour(const std::vector<VertexId>& selected,
                                     VertexId depot, const CompleteGraph& g,
                                     int max_vertices) {
  if (static_cast<int>(selected.size()) > max_vertices) {
    throw CapabilityRefusal("exact TSP limited to " +
                            std::to_string(max_vertices) + " vertices, got " +
                            std::to_string(selected.size()));
  }
  if (selected.empty()) return {depot, depot};
  std::vector<VertexId> order = selected;
  std::sort(order.begin(), order.end());
  std::vector<VertexId> best_order = order;
  double best = kInf;
  do {
    double len = g.weight(depot, order.front());
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      len += g.weight(order[i], order[i + 1]);
    }
    len += g.weight(order.back(), depot);
    if (len < best) {
      best = len;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<VertexId> tour{depot};
  tour.insert(tour.end(), best_order.begin(), best_order.end());
  tour.push_back(depot);
  return tour;
}

double exact_tsp_length(const std::vector<VertexId>& selected, VertexId depot,
                        const CompleteGraph& g, int max_vertices) {
  return tour_length(exact_tsp_tour(selected, depot, g, max_vertices), g);
}

std::vector<Violation> validate_path(const RoutePath& p,
                                     const CompleteGraph& g, VertexId depot,
                                     double budget, int max_sensors,
                                     double eta) {
  std::vector<Violation> out;
  for (VertexId v : p.vertices) {
    if (v < 0 || v >= g.size()) {
      out.push_back({Violation::Kind::kUnknownVertex,
                     "vertex " + std::to_string(v) + " is not in the graph"});
      return out;
    }
  }
  if (p.vertices.size() < 2 || p.vertices.front() != depot ||
      p.vertices.back() != depot) {
    out.push_back({Violation::Kind::kDepotEndpoints,
                   "path must start and end at depot " +
                       std::to_string(depot)});
  }
  const auto inner = p.interior();
  std::set<VertexId> seen;
  for (VertexId v : inner) {
    if (!seen.insert(v).second) {
      out.push_back({Violation::Kind::kDuplicateVertex,
                     "interior vertex " + std::to_string(v) + " repeats"});
    }
  }
  for (VertexId v : p.drops) {
    if (seen.find(v) == seen.end()) {
      out.push_back({Violation::Kind::kDropNotInterior,
                     "drop vertex " + std::to_string(v) +
                         " is not an interior vertex of the path"});
    }
  }
  if (static_cast<int>(p.drops.size()) > max_sensors) {
    out.push_back({Violation::Kind::kSensorCount,
                   "path drops " + std::to_string(p.drops.size()) +
                       " sensors but only " + std::to_string(max_sensors) +
                       " are available"});
  }
  if (p.vertices.size() >= 2) {
    const double cost = path_cost(p, g, eta);
    if (cost > budget) {
      out.push_back({Violation::Kind::kBudget,
                     "path cost " + std::to_string(cost) + " exceeds budget " +
                         std::to_string(budget) + " by " +
                         std::to_string(cost - budget)});
    }
  }
  return out;
}

}  // namespace airdrop
