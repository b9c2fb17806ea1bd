#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "btlab/bigint.hpp"
#include "btlab/graph.hpp"
#include "btlab/presentation.hpp"

namespace btlab {

/// A graph with a 2-cell glued along each stored simple cycle. Cells are
/// kept in canonical form: smallest vertex first, then the direction whose
/// second vertex is smaller than the last. The stored order is the
/// orientation used for boundaries.
struct TwoComplex {
  Graph graph;
  unsigned max_length = 0;
  std::vector<std::vector<VertexId>> cells;
};

inline constexpr std::size_t kDefaultCellCap = 5'000'000;
inline constexpr std::size_t kDefaultCosetBudget = 100'000;

/// All simple cycles of length 3..k, sorted. Throws InvalidInput for k < 3
/// and ResourceBudgetExceeded past `cell_cap` cells.
TwoComplex pk_complex(const Graph& g, unsigned k, std::size_t cell_cap = kDefaultCellCap);

struct Homology {
  std::size_t components = 0;
  std::size_t rank_d1 = 0;
  std::size_t rank_d2 = 0;
  std::size_t h1_rank = 0;
  std::vector<BigInt> h1_torsion;
  std::size_t h2_rank = 0;
};

/// Integral H_1 (and rank H_2) from the boundary maps. The Euler relation
/// V - E + F = b0 - b1 + b2 is checked; a mismatch throws InvalidInput.
Homology homology_h1(const TwoComplex& c);

/// Generators are the edges outside a BFS spanning tree rooted at vertex 0;
/// each cell contributes its boundary word. Throws InvalidInput if the
/// graph is disconnected.
Presentation edge_path_presentation(const TwoComplex& c);

enum class Verdict { Yes, No, Unknown };
std::string_view to_string(Verdict v);

struct SimpleConnectivity {
  Verdict verdict = Verdict::Unknown;
  Homology homology;
  std::size_t generators_before = 0;
  std::size_t generators_after = 0;
  std::size_t relators_after = 0;
  CosetEnumeration cosets;
};

/// No when H_1 is nonzero or the enumerated group is finite of order > 1;
/// Yes when coset enumeration closes with a single coset; Unknown when the
/// coset budget runs out. Throws InvalidInput if the graph is disconnected.
SimpleConnectivity bounded_simply_connected(const TwoComplex& c, std::size_t coset_budget = kDefaultCosetBudget);

}  // namespace btlab
