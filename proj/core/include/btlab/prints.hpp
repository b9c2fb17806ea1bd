#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "btlab/building.hpp"
#include "btlab/group.hpp"

namespace btlab {

/// Set of type-0 vertices of a ball, as sorted ids. A print of x is the
/// closed 1-neighbourhood of x intersected with the type-0 vertices; x is
/// then its source.
struct Print {
  std::vector<VertexId> members;

  friend bool operator==(const Print&, const Print&) = default;
  friend auto operator<=>(const Print&, const Print&) = default;
};

/// Throws BoundaryVertex unless dist_root(x) <= ρ - 1.
Print print_of(const BuildingBall& ball, VertexId x);

/// Expected print size: 1 for type 0, otherwise [n, τ(x)]_p.
std::size_t expected_print_size(const BuildingParams& params, int type);

/// The unique vertex of the building whose print is `members`.
///
/// Every source is adjacent or equal to each member, so the search runs over
/// the intersection of the members' closed neighbourhoods. Candidates at the
/// ball's boundary are decided from their in-ball type-0 neighbours together
/// with the print size law.
///
/// Throws InvalidInput for an empty set or a member of nonzero type,
/// BoundaryVertex when every member lies on the boundary sphere (a source
/// could then lie outside the ball), NotAPrint when no vertex qualifies, and
/// AmbiguousPrint when two do.
VertexId source_of(const BuildingBall& ball, std::span<const VertexId> members);

/// Same search restricted to sources with dist_root <= max_depth (which must
/// be <= ρ - 1, so every candidate print is computed exactly). Never needs
/// the size law.
VertexId source_within(const BuildingBall& ball, std::span<const VertexId> members, unsigned max_depth);

struct EquivarianceFailure {
  VertexId vertex;
  VertexId image;
  std::vector<VertexId> mapped_print;
  std::vector<VertexId> print_of_image;
};

struct EquivarianceReport {
  std::size_t checked = 0;
  std::vector<EquivarianceFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// For each sample x, compares g applied to print_of(x) with
/// print_of(g x), element by element.
///
/// Throws InvalidInput unless det_valuation(g) ≡ 0 (mod n), and OutOfBall if
/// g x leaves the interior or a mapped print member leaves the ball.
EquivarianceReport equivariance_check(const BuildingBall& ball, const GroupElement& g,
                                      std::span<const VertexId> sample);

}  // namespace btlab
