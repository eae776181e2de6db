#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "airdrop/gp.hpp"

namespace airdrop {

using VertexId = int;

/// Candidate airborne release vertex and the Gaussian landing distribution a
/// sensor dropped there induces on the ground.
struct DropNode {
  VertexId id = 0;
  Eigen::Vector3d position = Eigen::Vector3d::Zero();  // x, y, altitude
  UncertainLocation landing;
};

struct GraphEdge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;  // travel time units
};

/// Weighted undirected graph of drop candidates. Vertex ids are dense
/// 0..N-1; each edge is stored once and looked up symmetrically.
struct WorldGraph {
  std::vector<DropNode> vertices;
  std::vector<GraphEdge> edges;
  std::vector<VertexId> depots;  // one per UAV

  void validate() const;
};

/// Metric closure of a WorldGraph: dense shortest-path distances that
/// satisfy the triangle inequality exactly. Immutable after construction.
class CompleteGraph {
public:
  CompleteGraph(std::vector<DropNode> vertices, Eigen::MatrixXd dist,
                std::vector<VertexId> depots);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<DropNode>& vertices() const { return vertices_; }
  const DropNode& vertex(VertexId v) const;
  const std::vector<VertexId>& depots() const { return depots_; }
  double weight(VertexId u, VertexId v) const;
  const Eigen::MatrixXd& weights() const { return dist_; }

private:
  std::vector<DropNode> vertices_;
  Eigen::MatrixXd dist_;
  std::vector<VertexId> depots_;
};

/// All-pairs shortest-path closure. Throws ValidationError naming an
/// unreachable vertex pair if the graph is disconnected. The result is
/// relaxed to a fixed point so every triangle inequality holds exactly in
/// floating point.
CompleteGraph metric_completion(const WorldGraph& g);

/// Re-closing an already complete graph; changes no weight (idempotence).
CompleteGraph metric_completion(const CompleteGraph& g);

/// One UAV's closed route: starts and ends at the depot, drops at a subset
/// of the interior vertices.
struct RoutePath {
  int uav_index = 0;
  std::vector<VertexId> vertices;  // depot ... depot
  std::vector<VertexId> drops;

  std::vector<VertexId> interior() const;
};

/// Tour length plus per-drop time: C(P) = l(P) + |drops| * eta.
/// Throws ValidationError on malformed paths (bad ids, open tour).
double path_cost(const RoutePath& p, const CompleteGraph& g, double eta);

/// Closed tour from `depot` through `selected`, nearest-neighbor order then
/// 2-opt to a local optimum. Deterministic: all ties break toward the
/// smallest vertex id.
std::vector<VertexId> tsp_tour(const std::vector<VertexId>& selected,
                               VertexId depot, const CompleteGraph& g);

/// Exhaustive-permutation optimal tour length; refuses more than
/// `max_vertices` selected vertices.
double exact_tsp_length(const std::vector<VertexId>& selected, VertexId depot,
                        const CompleteGraph& g, int max_vertices = 8);
std::vector<VertexId> exact_tsp_tour(const std::vector<VertexId>& selected,
                                     VertexId depot, const CompleteGraph& g,
                                     int max_vertices = 8);

struct Violation {
  enum class Kind { kBudget, kSensorCount, kDepotEndpoints, kDuplicateVertex, kUnknownVertex, kDropNotInterior };
  Kind kind;
  std::string message;
};

/// Checks a path against its limits; violations are data, not errors.
std::vector<Violation> validate_path(const RoutePath& p,
                                     const CompleteGraph& g, VertexId depot,
                                     double budget, int max_sensors,
                                     double eta);

}  // namespace airdrop
