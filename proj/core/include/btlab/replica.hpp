#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "btlab/building.hpp"
#include "btlab/prints.hpp"

namespace btlab {

enum class ReplicaNodeKind { Kept, Print };

/// The graph rebuilt from the interior vertices whose type lies in the kept
/// set S, plus one node per print of an interior vertex of a missing type.
///
/// Nodes are numbered kept vertices first (ascending ball id), then prints
/// (ascending member list). Print sources are recovered from the member sets
/// alone; edges are decided by building adjacency of the underlying vertices:
/// kept-kept directly, kept-print against the recovered source, print-print
/// between the two recovered sources.
struct ReplicaGraph {
  std::set<int> kept_types;
  std::vector<VertexId> kept_ids;
  std::vector<Print> prints;
  std::vector<VertexId> print_sources;
  Graph graph;
  /// Replica node -> ball vertex (kept id, or source of the print).
  std::vector<VertexId> back_map;

  std::size_t kept_kept_edges = 0;
  std::size_t kept_print_edges = 0;
  std::size_t print_print_edges = 0;

  std::size_t node_count() const noexcept { return back_map.size(); }
  ReplicaNodeKind kind(VertexId node) const {
    return node < kept_ids.size() ? ReplicaNodeKind::Kept : ReplicaNodeKind::Print;
  }
};

/// Throws InvalidTypeSet if 0 ∉ S or S names a type outside [0, n), and
/// InvalidInput if ρ < 3.
ReplicaGraph build_replica(const BuildingBall& ball, const std::set<int>& kept_types);

struct ReplicaCounterexample {
  VertexId node_a;
  VertexId node_b;
  unsigned replica_distance;
  unsigned building_distance;
};

struct ReplicaVerification {
  bool ok = false;
  /// back_map is injective and onto the interior vertex set.
  bool bijective = false;
  /// Replica adjacency equals building adjacency of the images, node by node.
  bool adjacency_faithful = false;
  /// Every print node is adjacent to each of its members present in the replica.
  bool print_member_distance_one = false;
  /// Radius c of the sub-ball around the root on which every pairwise
  /// distance is certified exact on both sides.
  unsigned certified_radius = 0;
  std::size_t certified_nodes = 0;
  std::size_t pairs_checked = 0;
  /// Replica node -> ball vertex on the certified sub-ball (the witness).
  std::vector<std::pair<VertexId, VertexId>> witness;
  std::optional<ReplicaCounterexample> counterexample;
  std::string failure;
};

ReplicaVerification verify_replica(const BuildingBall& ball, const ReplicaGraph& replica);
ReplicaVerification verify_replica(const BuildingBall& ball, const std::set<int>& kept_types);

}  // namespace btlab
