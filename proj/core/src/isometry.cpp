#include "btlab/isometry.hpp"

#include <algorithm>

#include "btlab/error.hpp"

namespace btlab {
namespace {

std::vector<std::vector<unsigned>> distance_profiles(const RootedBall& ball) {
  std::vector<std::vector<unsigned>> out(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    out[i].reserve(ball.size());
    for (std::size_t j = 0; j < ball.size(); ++j) out[i].push_back(ball.distance(i, j));
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

class IsometrySearch {
 public:
  IsometrySearch(const RootedBall& a, const RootedBall& b, const IsometryOptions& options)
      : a_(a), b_(b), options_(options), map_(a.size(), kNone), used_(b.size(), false) {
    const auto pa = distance_profiles(a);
    const auto pb = distance_profiles(b);
    candidates_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (a.depth(i) != b.depth(j) || pa[i] != pb[j]) continue;
        if (options_.label_aware &&
            a.host().label(a.members()[i]) != b.host().label(b.members()[j])) {
          continue;
        }
        candidates_[i].push_back(j);
      }
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    if (a_.size() != b_.size()) return std::nullopt;
    for (const auto& c : candidates_) {
      if (c.empty()) return std::nullopt;
    }
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool consistent(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < i; ++k) {
      if (a_.distance(i, k) != b_.distance(j, map_[k])) return false;
    }
    return true;
  }

  // Members are visited in index order, which is (depth, id) order.
  bool extend(std::size_t i) {
    if (i == a_.size()) return true;
    for (std::size_t j : candidates_[i]) {
      if (used_[j] || !consistent(i, j)) continue;
      map_[i] = j;
      used_[j] = true;
      if (extend(i + 1)) return true;
      used_[j] = false;
    }
    map_[i] = kNone;
    return false;
  }

  const RootedBall& a_;
  const RootedBall& b_;
  const IsometryOptions& options_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> ball_isometry(const RootedBall& a, const RootedBall& b,
                                                      const IsometryOptions& options) {
  if (a.radius() != b.radius()) throw Error(ErrorKind::InvalidInput, "balls must have equal radius");
  return IsometrySearch(a, b, options).run();
}

LocallyReport is_r_locally(const Graph& g, std::span<const RootedBall> reference, unsigned r,
                           const Horizon* horizon, const IsometryOptions& options) {
  for (const RootedBall& ref : reference) {
    if (ref.radius() != r) throw Error(ErrorKind::InvalidInput, "reference ball radius differs from r");
  }
  if (horizon && horizon->dist_root.size() != g.vertex_count()) {
    throw Error(ErrorKind::InvalidInput, "horizon does not match the graph");
  }
  LocallyReport report;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (horizon && horizon->dist_root[v] + r > horizon->radius) {
      report.inexact.push_back(v);
      continue;
    }
    const RootedBall ball = extract_rooted_ball(g, v, r);
    if (horizon && !metric_is_exact(ball, *horizon)) {
      report.inexact.push_back(v);
      continue;
    }
    bool matched = false;
    for (const RootedBall& ref : reference) {
      if (ref.size() == ball.size() && ball_isometry(ball, ref, options)) {
        matched = true;
        break;
      }
    }
    (matched ? report.passed : report.failed).push_back(v);
  }
  return report;
}

}  // namespace btlab
