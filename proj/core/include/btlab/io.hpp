#pragma once

#include <string>
#include <string_view>

#include "btlab/apartment.hpp"
#include "btlab/building.hpp"
#include "btlab/replica.hpp"
#include "btlab/simplicial.hpp"

namespace btlab {

/// {"n","p","radius","vertices":[{"id","hnf","type","dist_root"}],"edges"};
/// HNF entries are decimal strings. indent < 0 gives compact output.
std::string ball_to_json(const BuildingBall& ball, int indent = -1);

/// Parses ball JSON and rebuilds the ball, re-canonicalizing every basis.
/// Throws InvalidInput on malformed documents or non-canonical bases.
BuildingBall ball_from_json(std::string_view text);

/// Vertices filled by type colour; the root is double-circled.
std::string ball_to_dot(const BuildingBall& ball);

/// {"n","p","radius","vertices":[{"id","exponents","type"}],"edges"}.
std::string apartment_to_json(const ApartmentSlice& slice, int indent = -1);
std::string apartment_to_dot(const ApartmentSlice& slice);

/// {"kept":[ids],"prints":[{"members","source"}],"edges":[[a,b]]}, with ball
/// ids for kept vertices, members and sources, and replica node ids in edges.
std::string replica_to_json(const ReplicaGraph& replica, int indent = -1);
/// Kept nodes as circles, print nodes as squares.
std::string replica_to_dot(const ReplicaGraph& replica);

/// {"h1_rank","h1_torsion","verdict","cells"}; torsion as decimal strings,
/// cells as vertex sequences.
std::string pk_to_json(const TwoComplex& complex, const SimpleConnectivity& result, int indent = -1);

/// Reads a graph from a file holding either an edge list or ball JSON.
Graph read_graph_file(const std::string& path);

}  // namespace btlab
