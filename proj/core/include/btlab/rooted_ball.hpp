#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "btlab/graph.hpp"

namespace btlab {

/// Truncation data for a host graph that is itself a finite ball: depth of
/// every vertex below the truncation centre and the truncation radius. Edges
/// between retained vertices are assumed complete (induced subgraph).
struct Horizon {
  std::vector<unsigned> dist_root;
  unsigned radius = 0;
};

/// True when an in-ball distance d between vertices at depths du, dv is the
/// true distance in the untruncated graph: every strictly shorter path would
/// have its interior vertices at depth <= (du + dv + d - 1) / 2, hence
/// inside the ball, and paths of length <= 1 are edges between retained
/// vertices.
bool within_horizon(unsigned du, unsigned dv, unsigned d, unsigned radius);

/// Closed ball B(root, r) of a host graph with the host metric restricted to
/// its members. Distances are measured in the host, so a shortest path may
/// leave the ball.
class RootedBall {
 public:
  const Graph& host() const noexcept { return *host_; }
  VertexId root() const noexcept { return members_.front(); }
  unsigned radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return members_.size(); }

  /// Members sorted by (depth, id); index 0 is the root.
  const std::vector<VertexId>& members() const noexcept { return members_; }
  unsigned depth(std::size_t i) const { return depth_[i]; }
  unsigned distance(std::size_t i, std::size_t j) const { return metric_[i * members_.size() + j]; }
  std::optional<std::size_t> index_of(VertexId v) const;

 private:
  friend RootedBall extract_rooted_ball(const Graph&, VertexId, unsigned);

  const Graph* host_ = nullptr;
  unsigned radius_ = 0;
  std::vector<VertexId> members_;
  std::vector<unsigned> depth_;
  std::vector<unsigned> metric_;
};

RootedBall extract_rooted_ball(const Graph& g, VertexId v, unsigned r);

/// Whether membership and every pairwise distance of `ball` are certified
/// exact under the host's truncation horizon.
bool metric_is_exact(const RootedBall& ball, const Horizon& horizon);

}  // namespace btlab
