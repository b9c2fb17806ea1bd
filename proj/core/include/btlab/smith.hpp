#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "btlab/bigint.hpp"
#include "btlab/matrix.hpp"

namespace btlab {

/// Sparse integer matrix given by its rows; each row lists (column, value)
/// pairs with distinct columns and nonzero values.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> entries;
};

/// Rank and invariant factors of an integer matrix. Only invariant factors
/// greater than 1 are listed, in divisibility order.
struct SmithInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};

/// Diagonal of the Smith normal form of a dense matrix: the nonzero
/// invariant factors d_1 | d_2 | ... (all positive).
std::vector<BigInt> smith_diagonal(IntMatrix m);

/// Unit-pivot sparse elimination followed by a dense Smith normal form of
/// whatever is left. Throws PrecisionOverflow if an intermediate entry of the
/// sparse phase leaves the 64-bit range.
SmithInvariants smith_invariants(const SparseIntMatrix& m);

}  // namespace btlab
