#pragma once

#include <cstddef>
#include <random>
#include <span>

#include "btlab/lattice.hpp"
#include "btlab/matrix.hpp"
#include "btlab/params.hpp"

namespace btlab {

/// An integer matrix with determinant ±p^k, acting on lattice classes by
/// left multiplication on basis columns.
class GroupElement {
 public:
  /// Throws RankDeficient for a singular matrix and NotCommensurable when the
  /// determinant is not ± a power of p.
  static GroupElement make(const BuildingParams& params, IntMatrix matrix);

  static GroupElement identity(const BuildingParams& params);
  static GroupElement diagonal(const BuildingParams& params, std::span<const unsigned> exponents);
  /// Permutation matrix sending e_i to e_{perm[i]}.
  static GroupElement permutation(const BuildingParams& params, std::span<const std::size_t> perm);
  /// I + c * E_{row,col}, row != col. Lies in SL_n(Z).
  static GroupElement transvection(const BuildingParams& params, std::size_t row, std::size_t col, long long c);

  const BuildingParams& params() const noexcept { return params_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  unsigned det_valuation() const noexcept { return det_valuation_; }

  GroupElement operator*(const GroupElement& rhs) const;

 private:
  GroupElement(const BuildingParams& params, IntMatrix matrix, unsigned det_valuation)
      : params_(params), matrix_(std::move(matrix)), det_valuation_(det_valuation) {}

  BuildingParams params_;
  IntMatrix matrix_;
  unsigned det_valuation_ = 0;
};

/// Default magnitude guard for act(): 2^128.
BigInt default_precision_bound();

/// Class of g·L. Throws PrecisionOverflow if an entry of g·basis(L) exceeds
/// `bound` in absolute value.
LatticeClass act(const GroupElement& g, const LatticeClass& l, const BigInt& bound = default_precision_bound());

/// Product of `length` random transvections I ± E_{ij}; an element of SL_n(Z).
GroupElement random_sl_word(const BuildingParams& params, std::size_t length, std::mt19937_64& rng);

}  // namespace btlab
