#pragma once

#include <cstdint>
#include <vector>

#include "btlab/bigint.hpp"
#include "btlab/params.hpp"

namespace btlab {

/// A j-dimensional subspace of F_p^n, 1 <= j <= n-1, stored by its reduced
/// row echelon form (j rows, pivots strictly increasing, pivot entries 1).
class FpSubspace {
 public:
  using Row = std::vector<std::uint64_t>;

  FpSubspace(const BuildingParams& params, std::vector<Row> rref);

  const BuildingParams& params() const noexcept { return params_; }
  unsigned dim() const noexcept { return static_cast<unsigned>(rref_.size()); }
  const std::vector<Row>& rref() const noexcept { return rref_; }
  std::vector<std::size_t> pivots() const;

  friend bool operator==(const FpSubspace& a, const FpSubspace& b) { return a.rref_ == b.rref_; }
  friend bool operator<(const FpSubspace& a, const FpSubspace& b) { return a.rref_ < b.rref_; }

 private:
  BuildingParams params_;
  std::vector<Row> rref_;
};

/// Number of j-dimensional subspaces of F_p^n.
BigInt gaussian_binomial(unsigned n, unsigned j, std::uint64_t p);

/// Every j-dimensional subspace exactly once, sorted lexicographically by
/// rref rows. Throws DimensionOutOfRange unless 1 <= j <= n-1.
std::vector<FpSubspace> enumerate_subspaces(const BuildingParams& params, unsigned j);

}  // namespace btlab
