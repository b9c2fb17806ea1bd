#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "btlab/graph.hpp"
#include "btlab/lattice.hpp"
#include "btlab/rooted_ball.hpp"

namespace btlab {

struct BallOptions {
  std::size_t vertex_cap = 1'000'000;
};

/// Finite ball of radius ρ around [Z_p^n] in the 1-skeleton of the building.
/// Vertex 0 is the root; ids follow BFS layers, lexicographic on the
/// canonical basis within a layer. The graph is the induced subgraph, so
/// edges between boundary vertices are present too.
class BuildingBall {
 public:
  /// Assembles and validates a ball from parts (used by deserialization).
  static BuildingBall assemble(const BuildingParams& params, unsigned radius, std::vector<LatticeClass> vertices,
                               std::vector<unsigned> dist_root, std::vector<Edge> edges);

  const BuildingParams& params() const noexcept { return params_; }
  unsigned radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  VertexId root() const noexcept { return 0; }

  const LatticeClass& vertex(VertexId v) const { return vertices_[v]; }
  const std::vector<LatticeClass>& vertices() const noexcept { return vertices_; }
  int type(VertexId v) const { return graph_.label(v); }
  unsigned dist_root(VertexId v) const { return dist_root_[v]; }
  const Graph& graph() const noexcept { return graph_; }

  std::optional<VertexId> find(const LatticeClass& l) const;

  /// dist_root(v) + margin <= radius.
  bool is_interior(VertexId v, unsigned margin = 1) const { return dist_root_[v] + margin <= radius_; }

  /// Full building degree Σ_j [n, j]_p.
  std::size_t full_degree() const noexcept { return full_degree_; }

  Horizon horizon() const { return {dist_root_, radius_}; }

 private:
  friend BuildingBall generate_ball(const BuildingParams&, unsigned, const BallOptions&);
  explicit BuildingBall(const BuildingParams& params) : params_(params) {}
  void index_vertices();

  BuildingParams params_;
  unsigned radius_ = 0;
  std::vector<LatticeClass> vertices_;
  std::vector<unsigned> dist_root_;
  Graph graph_;
  std::unordered_map<LatticeClass, VertexId, LatticeClassHash> index_;
  std::size_t full_degree_ = 0;
};

/// Breadth-first closure of {[Z_p^n]} under neighbours, truncated at ρ.
/// Throws ResourceBudgetExceeded if more than options.vertex_cap vertices
/// would be created.
BuildingBall generate_ball(const BuildingParams& params, unsigned radius, const BallOptions& options = {});

struct DistanceResult {
  unsigned distance;
  /// The in-ball distance provably equals the building distance.
  bool exact;
};

DistanceResult exact_distance(const BuildingBall& ball, VertexId u, VertexId v);

/// Vertex count per type; only types that occur are listed.
std::map<int, std::size_t> types_histogram(const BuildingBall& ball);

}  // namespace btlab
