#include "btlab/prints.hpp"

#include <algorithm>
#include <string>

#include "btlab/error.hpp"

namespace btlab {
namespace {

// Type-0 vertices among x and its in-ball neighbours.
std::vector<VertexId> type0_star(const BuildingBall& ball, VertexId x) {
  std::vector<VertexId> out;
  if (ball.type(x) == 0) out.push_back(x);
  for (VertexId w : ball.graph().neighbors(x)) {
    if (ball.type(w) == 0) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> validated_members(const BuildingBall& ball, std::span<const VertexId> members) {
  if (members.empty()) throw Error(ErrorKind::InvalidInput, "empty member set");
  std::vector<VertexId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexId m : sorted) {
    if (m >= ball.size()) throw Error(ErrorKind::InvalidInput, "member id out of range");
    if (ball.type(m) != 0) {
      throw Error(ErrorKind::InvalidInput, "member " + std::to_string(m) + " does not have type 0");
    }
  }
  return sorted;
}

// Vertices adjacent or equal to every member.
std::vector<VertexId> common_closed_neighbourhood(const BuildingBall& ball, const std::vector<VertexId>& members) {
  auto closed = [&](VertexId v) {
    std::vector<VertexId> out(ball.graph().neighbors(v).begin(), ball.graph().neighbors(v).end());
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
  };
  std::vector<VertexId> common = closed(members.front());
  for (std::size_t i = 1; i < members.size() && !common.empty(); ++i) {
    const auto next = closed(members[i]);
    std::vector<VertexId> kept;
    std::set_intersection(common.begin(), common.end(), next.begin(), next.end(), std::back_inserter(kept));
    common = std::move(kept);
  }
  return common;
}

VertexId unique_or_throw(const std::vector<VertexId>& confirmed) {
  if (confirmed.empty()) throw Error(ErrorKind::NotAPrint, "no vertex has this print");
  if (confirmed.size() > 1) {
    throw Error(ErrorKind::AmbiguousPrint, "vertices " + std::to_string(confirmed[0]) + " and " +
                                               std::to_string(confirmed[1]) + " share a print");
  }
  return confirmed.front();
}

}  // namespace

Print print_of(const BuildingBall& ball, VertexId x) {
  if (x >= ball.size()) throw Error(ErrorKind::InvalidInput, "vertex id out of range");
  if (!ball.is_interior(x)) {
    throw Error(ErrorKind::BoundaryVertex, "vertex " + std::to_string(x) + " lies on the boundary sphere");
  }
  return Print{type0_star(ball, x)};
}

std::size_t expected_print_size(const BuildingParams& params, int type) {
  if (type == 0) return 1;
  return gaussian_binomial(params.n(), static_cast<unsigned>(type), params.p()).convert_to<std::size_t>();
}

VertexId source_of(const BuildingBall& ball, std::span<const VertexId> members) {
  const auto sorted = validated_members(ball, members);
  const bool reaches_inside = std::any_of(sorted.begin(), sorted.end(), [&](VertexId m) { return ball.is_interior(m); });
  if (!reaches_inside) {
    throw Error(ErrorKind::BoundaryVertex, "all members lie on the boundary sphere; a source may lie outside the ball");
  }
  std::vector<VertexId> confirmed;
  for (VertexId c : common_closed_neighbourhood(ball, sorted)) {
    const auto star = type0_star(ball, c);
    if (ball.is_interior(c)) {
      if (star == sorted) confirmed.push_back(c);
      continue;
    }
    // Boundary candidate: the in-ball part of its print already contains
    // every member, so the print equals the set iff nothing is missing.
    if (star == sorted && expected_print_size(ball.params(), ball.type(c)) == sorted.size()) {
      confirmed.push_back(c);
    }
  }
  return unique_or_throw(confirmed);
}

VertexId source_within(const BuildingBall& ball, std::span<const VertexId> members, unsigned max_depth) {
  if (max_depth + 1 > ball.radius()) throw Error(ErrorKind::InvalidInput, "max_depth must be at most radius - 1");
  const auto sorted = validated_members(ball, members);
  std::vector<VertexId> confirmed;
  for (VertexId c : common_closed_neighbourhood(ball, sorted)) {
    if (ball.dist_root(c) <= max_depth && type0_star(ball, c) == sorted) confirmed.push_back(c);
  }
  return unique_or_throw(confirmed);
}

EquivarianceReport equivariance_check(const BuildingBall& ball, const GroupElement& g,
                                      std::span<const VertexId> sample) {
  const BuildingParams& params = ball.params();
  if (!(g.params() == params)) throw Error(ErrorKind::InvalidInput, "parameter mismatch");
  if (g.det_valuation() % params.n() != 0) {
    throw Error(ErrorKind::InvalidInput, "group element does not preserve types (det valuation not 0 mod n)");
  }
  auto image_of = [&](VertexId v) {
    auto id = ball.find(act(g, ball.vertex(v)));
    if (!id) throw Error(ErrorKind::OutOfBall, "image of vertex " + std::to_string(v) + " leaves the ball");
    return *id;
  };

  EquivarianceReport report;
  for (VertexId x : sample) {
    const Print print = print_of(ball, x);
    const VertexId gx = image_of(x);
    if (!ball.is_interior(gx)) {
      throw Error(ErrorKind::OutOfBall, "image of vertex " + std::to_string(x) + " is on the boundary");
    }
    std::vector<VertexId> mapped;
    for (VertexId m : print.members) mapped.push_back(image_of(m));
    std::sort(mapped.begin(), mapped.end());
    const Print expected = print_of(ball, gx);
    ++report.checked;
    if (mapped != expected.members) report.failures.push_back({x, gx, std::move(mapped), expected.members});
  }
  return report;
}

}  // namespace btlab
