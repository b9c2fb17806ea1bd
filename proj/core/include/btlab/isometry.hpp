#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "btlab/graph.hpp"
#include "btlab/rooted_ball.hpp"

namespace btlab {

struct IsometryOptions {
  /// Also require equal vertex labels (building types).
  bool label_aware = false;
};

/// Root-preserving isometry between two rooted balls, as a map from member
/// index in `a` to member index in `b`. Backtracking over members in
/// (depth, id) order, pruned by distance profiles (sorted distances to all
/// other members) and by consistency with every already mapped member.
std::optional<std::vector<std::size_t>> ball_isometry(const RootedBall& a, const RootedBall& b,
                                                      const IsometryOptions& options = {});

struct LocallyReport {
  std::vector<VertexId> passed;
  std::vector<VertexId> failed;
  /// Skipped: the ball at this vertex reaches past the truncation horizon.
  std::vector<VertexId> inexact;

  bool ok() const noexcept { return failed.empty(); }
};

/// Checks that every r-ball of `g` is isometric to one of `reference`. With a
/// horizon, vertices whose r-ball metric is not certified are skipped and
/// listed under `inexact`.
LocallyReport is_r_locally(const Graph& g, std::span<const RootedBall> reference, unsigned r,
                           const Horizon* horizon = nullptr, const IsometryOptions& options = {});

}  // namespace btlab
