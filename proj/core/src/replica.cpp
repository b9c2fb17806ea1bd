#include "btlab/replica.hpp"

#include <algorithm>
#include <string>

#include "btlab/error.hpp"

namespace btlab {
namespace {

constexpr VertexId kNoNode = static_cast<VertexId>(-1);

std::vector<VertexId> node_lookup(const BuildingBall& ball, const ReplicaGraph& replica) {
  std::vector<VertexId> node_of(ball.size(), kNoNode);
  for (VertexId a = 0; a < replica.node_count(); ++a) node_of[replica.back_map[a]] = a;
  return node_of;
}

}  // namespace

ReplicaGraph build_replica(const BuildingBall& ball, const std::set<int>& kept_types) {
  const int n = static_cast<int>(ball.params().n());
  if (!kept_types.contains(0)) throw Error(ErrorKind::InvalidTypeSet, "the kept type set must contain 0");
  for (int t : kept_types) {
    if (t < 0 || t >= n) throw Error(ErrorKind::InvalidTypeSet, "type " + std::to_string(t) + " out of range");
  }
  if (ball.radius() < 3) throw Error(ErrorKind::InvalidInput, "replica construction needs radius >= 3");

  ReplicaGraph replica;
  replica.kept_types = kept_types;
  for (VertexId v = 0; v < ball.size(); ++v) {
    if (!ball.is_interior(v)) continue;
    if (kept_types.contains(ball.type(v))) {
      replica.kept_ids.push_back(v);
    } else {
      replica.prints.push_back(print_of(ball, v));
    }
  }
  std::sort(replica.prints.begin(), replica.prints.end());

  // Sources come from the member sets only.
  const unsigned interior_depth = ball.radius() - 1;
  for (const Print& print : replica.prints) {
    replica.print_sources.push_back(source_within(ball, print.members, interior_depth));
  }

  replica.back_map = replica.kept_ids;
  replica.back_map.insert(replica.back_map.end(), replica.print_sources.begin(), replica.print_sources.end());
  const auto node_of = node_lookup(ball, replica);

  std::vector<Edge> edges;
  for (VertexId a = 0; a < replica.node_count(); ++a) {
    for (VertexId w : ball.graph().neighbors(replica.back_map[a])) {
      const VertexId b = node_of[w];
      if (b == kNoNode || b <= a) continue;
      edges.emplace_back(a, b);
      const bool a_kept = replica.kind(a) == ReplicaNodeKind::Kept;
      const bool b_kept = replica.kind(b) == ReplicaNodeKind::Kept;
      if (a_kept && b_kept) {
        ++replica.kept_kept_edges;
      } else if (a_kept || b_kept) {
        ++replica.kept_print_edges;
      } else {
        ++replica.print_print_edges;
      }
    }
  }
  std::vector<int> labels;
  for (VertexId v : replica.back_map) labels.push_back(ball.type(v));
  replica.graph = Graph::from_edges(replica.node_count(), std::move(edges), std::move(labels));
  return replica;
}

ReplicaVerification verify_replica(const BuildingBall& ball, const ReplicaGraph& replica) {
  ReplicaVerification result;
  const unsigned interior_radius = ball.radius() - 1;

  // Bijection onto the interior.
  std::vector<VertexId> images = replica.back_map;
  std::sort(images.begin(), images.end());
  std::vector<VertexId> interior;
  for (VertexId v = 0; v < ball.size(); ++v) {
    if (ball.is_interior(v)) interior.push_back(v);
  }
  result.bijective = images == interior;
  if (!result.bijective) {
    result.failure = "back_map is not a bijection onto the interior vertices";
    return result;
  }
  const auto node_of = node_lookup(ball, replica);

  // Adjacency fidelity, node by node.
  result.adjacency_faithful = true;
  for (VertexId a = 0; a < replica.node_count() && result.adjacency_faithful; ++a) {
    std::vector<VertexId> mapped;
    for (VertexId b : replica.graph.neighbors(a)) mapped.push_back(replica.back_map[b]);
    std::sort(mapped.begin(), mapped.end());
    std::vector<VertexId> expected;
    for (VertexId w : ball.graph().neighbors(replica.back_map[a])) {
      if (ball.is_interior(w)) expected.push_back(w);
    }
    if (mapped != expected) {
      result.adjacency_faithful = false;
      result.failure = "replica neighbourhood of node " + std::to_string(a) + " differs from the building";
    }
  }

  // Every print node sits at distance 1 from its members.
  result.print_member_distance_one = true;
  for (std::size_t k = 0; k < replica.prints.size() && result.print_member_distance_one; ++k) {
    const auto p_node = static_cast<VertexId>(replica.kept_ids.size() + k);
    for (VertexId m : replica.prints[k].members) {
      const VertexId m_node = node_of[m];
      if (m_node == kNoNode) continue;  // member beyond the interior
      if (!replica.graph.adjacent(p_node, m_node)) {
        result.print_member_distance_one = false;
        result.failure = "print node " + std::to_string(p_node) + " is not adjacent to member " + std::to_string(m);
        break;
      }
    }
  }

  // Distance preservation on the certified sub-ball. The replica is a ball of
  // radius ρ-1 around the root node and the building ball has radius ρ; for
  // depths <= ρ/2 every pair is certified by the horizon rule on both sides.
  const VertexId root_node = node_of[ball.root()];
  const auto replica_depth = bfs_distances(replica.graph, root_node);
  const unsigned c = ball.radius() / 2;
  result.certified_radius = c;
  std::vector<VertexId> sub_ball;
  for (VertexId a = 0; a < replica.node_count(); ++a) {
    if (replica_depth[a] <= c) sub_ball.push_back(a);
  }
  std::size_t building_sub_ball = 0;
  for (VertexId v = 0; v < ball.size(); ++v) building_sub_ball += ball.dist_root(v) <= c ? 1 : 0;
  result.certified_nodes = sub_ball.size();
  bool distances_ok = sub_ball.size() == building_sub_ball;
  if (!distances_ok) result.failure = "certified sub-balls differ in size";

  for (std::size_t i = 0; i < sub_ball.size() && distances_ok; ++i) {
    const VertexId a = sub_ball[i];
    const auto d_rep = bfs_distances(replica.graph, a, 2 * c);
    const auto d_bld = bfs_distances(ball.graph(), replica.back_map[a], 2 * c);
    for (std::size_t j = i; j < sub_ball.size(); ++j) {
      const VertexId b = sub_ball[j];
      const VertexId u = replica.back_map[a];
      const VertexId v = replica.back_map[b];
      const bool certified =
          within_horizon(replica_depth[a], replica_depth[b], d_rep[b], interior_radius) &&
          within_horizon(ball.dist_root(u), ball.dist_root(v), d_bld[v], ball.radius());
      if (!certified || d_rep[b] != d_bld[v] || ball.dist_root(u) != replica_depth[a]) {
        result.counterexample = ReplicaCounterexample{a, b, d_rep[b], d_bld[v]};
        result.failure = certified ? "distance mismatch on the certified sub-ball"
                                   : "pair on the sub-ball is not certified exact";
        distances_ok = false;
        break;
      }
      ++result.pairs_checked;
    }
  }
  if (distances_ok) {
    for (VertexId a : sub_ball) result.witness.emplace_back(a, replica.back_map[a]);
  }
  result.ok = result.bijective && result.adjacency_faithful && result.print_member_distance_one && distances_ok;
  return result;
}

ReplicaVerification verify_replica(const BuildingBall& ball, const std::set<int>& kept_types) {
  return verify_replica(ball, build_replica(ball, kept_types));
}

}  // namespace btlab
