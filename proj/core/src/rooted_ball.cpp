#include "btlab/rooted_ball.hpp"

#include <algorithm>
#include <unordered_map>

#include "btlab/error.hpp"

namespace btlab {
namespace {

// BFS truncated at max_depth that only touches what it visits.
std::unordered_map<VertexId, unsigned> local_bfs(const Graph& g, VertexId source, unsigned max_depth) {
  std::unordered_map<VertexId, unsigned> dist;
  std::vector<VertexId> queue{source};
  dist.emplace(source, 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    const unsigned dv = dist[v];
    if (dv >= max_depth) continue;
    for (VertexId w : g.neighbors(v)) {
      if (dist.emplace(w, dv + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

bool within_horizon(unsigned du, unsigned dv, unsigned d, unsigned radius) {
  return d <= 2 || du + dv + d <= 2 * radius + 2;
}

std::optional<std::size_t> RootedBall::index_of(VertexId v) const {
  auto it = std::find(members_.begin(), members_.end(), v);
  if (it == members_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

RootedBall extract_rooted_ball(const Graph& g, VertexId v, unsigned r) {
  if (v >= g.vertex_count()) throw Error(ErrorKind::InvalidInput, "root out of range");
  RootedBall ball;
  ball.host_ = &g;
  ball.radius_ = r;

  auto around = local_bfs(g, v, r);
  std::vector<std::pair<unsigned, VertexId>> order;
  order.reserve(around.size());
  for (const auto& [w, d] : around) order.emplace_back(d, w);
  std::sort(order.begin(), order.end());
  for (const auto& [d, w] : order) {
    ball.members_.push_back(w);
    ball.depth_.push_back(d);
  }

  const std::size_t k = ball.members_.size();
  ball.metric_.assign(k * k, 0);
  std::unordered_map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(ball.members_[i], i);
  for (std::size_t i = 0; i < k; ++i) {
    // Any two members are within 2r through the root.
    auto dist = local_bfs(g, ball.members_[i], 2 * r);
    for (std::size_t j = 0; j < k; ++j) ball.metric_[i * k + j] = dist.at(ball.members_[j]);
  }
  return ball;
}

bool metric_is_exact(const RootedBall& ball, const Horizon& horizon) {
  const unsigned root_depth = horizon.dist_root.at(ball.root());
  if (root_depth + ball.radius() > horizon.radius) return false;
  const std::size_t k = ball.size();
  for (std::size_t i = 0; i < k; ++i) {
    const unsigned di = horizon.dist_root[ball.members()[i]];
    for (std::size_t j = i + 1; j < k; ++j) {
      const unsigned dj = horizon.dist_root[ball.members()[j]];
      if (!within_horizon(di, dj, ball.distance(i, j), horizon.radius)) return false;
    }
  }
  return true;
}

}  // namespace btlab
