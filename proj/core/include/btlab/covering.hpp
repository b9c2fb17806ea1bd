#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "btlab/graph.hpp"

namespace btlab {

/// Total function from the vertices of one graph to the vertices of another.
struct VertexMap {
  std::vector<VertexId> image;
};

/// g ∘ f.
VertexMap compose(const VertexMap& f, const VertexMap& g);

/// "src dst" per line; every source vertex in [0, source_count) must appear once.
VertexMap read_vertex_map(std::istream& in, std::size_t source_count);

enum class CoveringViolationKind {
  ImageOutOfRange,
  EdgeNotPreserved,
  NotLocallyInjective,
  NotLocallySurjective,
};

std::string_view to_string(CoveringViolationKind kind);

struct CoveringViolation {
  VertexId vertex;
  CoveringViolationKind kind;
  std::string detail;
};

struct CoveringReport {
  std::vector<CoveringViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Star criterion for f: G -> H. Edges must map to edges, and at every
/// vertex v, f must restrict to a bijection N(v) -> N(f(v)). Vertices flagged
/// in `boundary` (a truncated G) are only checked for injectivity.
CoveringReport is_covering(const VertexMap& f, const Graph& g, const Graph& h,
                           const std::vector<bool>& boundary = {});

}  // namespace btlab
