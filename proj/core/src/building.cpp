#include "btlab/building.hpp"

#include <algorithm>
#include <string>

#include "btlab/error.hpp"

namespace btlab {
namespace {

std::size_t building_degree(const BuildingParams& params) {
  BigInt total = 0;
  for (unsigned j = 1; j < params.n(); ++j) total += gaussian_binomial(params.n(), j, params.p());
  return total.convert_to<std::size_t>();
}

std::vector<int> types_of(const std::vector<LatticeClass>& vertices) {
  std::vector<int> types;
  types.reserve(vertices.size());
  for (const LatticeClass& l : vertices) types.push_back(lattice_type(l));
  return types;
}

}  // namespace

void BuildingBall::index_vertices() {
  index_.clear();
  index_.reserve(vertices_.size());
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (!index_.emplace(vertices_[v], v).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate lattice class in ball");
    }
  }
}

std::optional<VertexId> BuildingBall::find(const LatticeClass& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BuildingBall BuildingBall::assemble(const BuildingParams& params, unsigned radius, std::vector<LatticeClass> vertices,
                                    std::vector<unsigned> dist_root, std::vector<Edge> edges) {
  if (vertices.empty()) throw Error(ErrorKind::InvalidInput, "ball has no vertices");
  if (dist_root.size() != vertices.size()) throw Error(ErrorKind::InvalidInput, "dist_root size mismatch");
  if (!(vertices.front() == standard_class(params))) throw Error(ErrorKind::InvalidInput, "vertex 0 is not the root");
  for (const LatticeClass& l : vertices) {
    if (!(l.params() == params)) throw Error(ErrorKind::InvalidInput, "vertex parameters differ from the ball");
  }
  for (unsigned d : dist_root) {
    if (d > radius) throw Error(ErrorKind::InvalidInput, "dist_root exceeds the radius");
  }
  BuildingBall ball(params);
  ball.radius_ = radius;
  ball.full_degree_ = building_degree(params);
  ball.graph_ = Graph::from_edges(vertices.size(), std::move(edges), types_of(vertices));
  ball.vertices_ = std::move(vertices);
  ball.dist_root_ = std::move(dist_root);
  ball.index_vertices();
  const auto bfs = bfs_distances(ball.graph_, 0);
  if (bfs != ball.dist_root_) throw Error(ErrorKind::InvalidInput, "dist_root disagrees with the edge set");
  for (const Edge& e : ball.graph_.edges()) {
    if (ball.type(e.first) == ball.type(e.second)) throw Error(ErrorKind::InvalidInput, "edge joins equal types");
  }
  // The edge set must be the induced building adjacency, and inner layers closed.
  const NeighborGenerator generator(params);
  for (VertexId v = 0; v < ball.size(); ++v) {
    std::vector<VertexId> inside;
    for (const LatticeClass& l : generator.neighbors(ball.vertices_[v])) {
      if (auto id = ball.find(l)) inside.push_back(*id);
    }
    std::sort(inside.begin(), inside.end());
    const auto listed = ball.graph_.neighbors(v);
    if (!std::equal(inside.begin(), inside.end(), listed.begin(), listed.end())) {
      throw Error(ErrorKind::InvalidInput, "edges at vertex " + std::to_string(v) + " differ from the building");
    }
    if (ball.dist_root_[v] < radius && inside.size() != ball.full_degree_) {
      throw Error(ErrorKind::InvalidInput, "ball is missing neighbours of vertex " + std::to_string(v));
    }
  }
  return ball;
}

BuildingBall generate_ball(const BuildingParams& params, unsigned radius, const BallOptions& options) {
  const NeighborGenerator generator(params);
  BuildingBall ball(params);
  ball.radius_ = radius;
  ball.full_degree_ = generator.degree();

  auto add_vertex = [&](LatticeClass l, unsigned depth) {
    if (ball.vertices_.size() >= options.vertex_cap) {
      throw Error(ErrorKind::ResourceBudgetExceeded,
                  "ball exceeds the vertex cap of " + std::to_string(options.vertex_cap));
    }
    const auto id = static_cast<VertexId>(ball.vertices_.size());
    ball.index_.emplace(l, id);
    ball.vertices_.push_back(std::move(l));
    ball.dist_root_.push_back(depth);
  };

  add_vertex(standard_class(params), 0);
  std::vector<Edge> edges;
  std::size_t layer_begin = 0;
  for (unsigned depth = 0; depth <= radius; ++depth) {
    const std::size_t layer_end = ball.vertices_.size();
    std::vector<LatticeClass> fresh;
    std::vector<std::pair<VertexId, std::size_t>> pending;  // (vertex, index into fresh)
    for (std::size_t v = layer_begin; v < layer_end; ++v) {
      for (LatticeClass& w : generator.neighbors(ball.vertices_[v])) {
        if (auto it = ball.index_.find(w); it != ball.index_.end()) {
          if (it->second > v) edges.emplace_back(static_cast<VertexId>(v), it->second);
          continue;
        }
        if (depth == radius) continue;
        pending.emplace_back(static_cast<VertexId>(v), fresh.size());
        fresh.push_back(std::move(w));
      }
    }
    // Next layer: deduplicate and order lexicographically, then assign ids.
    std::vector<LatticeClass> layer = fresh;
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    for (LatticeClass& l : layer) add_vertex(std::move(l), depth + 1);
    for (const auto& [v, k] : pending) edges.emplace_back(v, ball.index_.at(fresh[k]));
    layer_begin = layer_end;
  }

  ball.graph_ = Graph::from_edges(ball.vertices_.size(), std::move(edges), types_of(ball.vertices_));
  return ball;
}

DistanceResult exact_distance(const BuildingBall& ball, VertexId u, VertexId v) {
  if (u >= ball.size() || v >= ball.size()) throw Error(ErrorKind::InvalidInput, "vertex id out of range");
  if (u == v) return {0, true};
  const auto dist = bfs_distances(ball.graph(), u);
  const unsigned d = dist[v];
  return {d, within_horizon(ball.dist_root(u), ball.dist_root(v), d, ball.radius())};
}

std::map<int, std::size_t> types_histogram(const BuildingBall& ball) {
  std::map<int, std::size_t> out;
  for (VertexId v = 0; v < ball.size(); ++v) ++out[ball.type(v)];
  return out;
}

}  // namespace btlab
