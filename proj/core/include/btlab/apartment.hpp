#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "btlab/graph.hpp"
#include "btlab/lattice.hpp"

namespace btlab {

/// Exponent vector (k_1, ..., k_n) of a diagonal lattice ⊕ Z_p p^{k_i} e_i.
using ExponentTuple = std::vector<long long>;

/// Shift so the minimum entry is 0.
ExponentTuple normalize_exponents(ExponentTuple t);

/// Σ t_i mod n.
int tuple_type(const ExponentTuple& t);

/// Whether one normalized tuple arises from the other by adding 1 on a proper
/// nonempty subset of coordinates (then normalizing). Returns the subset size
/// measured from `a` to `b`, or 0 if not adjacent.
unsigned subset_increment(const ExponentTuple& a, const ExponentTuple& b);

/// The diagonal classes with normalized exponents bounded by ρ, with the
/// adjacency they inherit from the building.
class ApartmentSlice {
 public:
  const BuildingParams& params() const noexcept { return params_; }
  unsigned radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return tuples_.size(); }

  /// Vertex ids index this list, sorted by (max entry, tuple).
  const std::vector<ExponentTuple>& tuples() const noexcept { return tuples_; }
  const std::vector<LatticeClass>& classes() const noexcept { return classes_; }
  const Graph& graph() const noexcept { return graph_; }

 private:
  friend ApartmentSlice apartment_slice(const BuildingParams&, unsigned);
  explicit ApartmentSlice(const BuildingParams& params) : params_(params) {}

  BuildingParams params_;
  unsigned radius_ = 0;
  std::vector<ExponentTuple> tuples_;
  std::vector<LatticeClass> classes_;
  Graph graph_;
};

ApartmentSlice apartment_slice(const BuildingParams& params, unsigned radius);

}  // namespace btlab
