#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "btlab/matrix.hpp"
#include "btlab/params.hpp"
#include "btlab/subspace.hpp"

namespace btlab {

/// A vertex of the building: the homothety class of a Z_p-lattice in Q_p^n.
///
/// The class is stored through its unique representative L with
/// L ⊆ Z_p^n and L ⊄ pZ_p^n, written as a column Hermite basis: lower
/// triangular, diagonal entries powers of p, entries left of the diagonal
/// reduced into [0, diagonal). Equal classes have bit-identical bases.
class LatticeClass {
 public:
  const BuildingParams& params() const noexcept { return params_; }
  const IntMatrix& basis() const noexcept { return basis_; }
  /// m with [Z_p^n : L] = p^m.
  unsigned index_exponent() const noexcept { return index_exponent_; }
  /// Exponents of the diagonal entries.
  const std::vector<unsigned>& diagonal_exponents() const noexcept { return diagonal_exponents_; }

  friend bool operator==(const LatticeClass& a, const LatticeClass& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const LatticeClass& a, const LatticeClass& b) { return compare(a.basis_, b.basis_) < 0; }

  std::size_t hash() const noexcept { return hash_; }

 private:
  friend LatticeClass canonicalize(const BuildingParams&, const IntMatrix&);
  LatticeClass(const BuildingParams& params, IntMatrix basis, std::vector<unsigned> exponents);

  BuildingParams params_;
  IntMatrix basis_;
  std::vector<unsigned> diagonal_exponents_;
  unsigned index_exponent_ = 0;
  std::size_t hash_ = 0;
};

struct LatticeClassHash {
  std::size_t operator()(const LatticeClass& l) const noexcept { return l.hash(); }
};

/// Canonical class of the lattice spanned by the columns of `generators`
/// (n rows, integer entries). Callers clear p-denominators beforehand.
///
/// Throws RankDeficient if the columns do not span Q^n and NotCommensurable
/// if the spanned subgroup of Z^n has index divisible by a prime other than p.
LatticeClass canonicalize(const BuildingParams& params, const IntMatrix& generators);

LatticeClass standard_class(const BuildingParams& params);

/// Class of the diagonal lattice ⊕ Z_p p^{k_i} e_i; any integers allowed.
LatticeClass diagonal_class(const BuildingParams& params, std::span<const long long> exponents);

/// index_exponent mod n.
int lattice_type(const LatticeClass& l);

/// Precomputes, for every proper nonzero subspace W of F_p^n, a basis of the
/// preimage of W in Z_p^n. The neighbour of L attached to W is then the class
/// of basis(L) * preimage(W).
class NeighborGenerator {
 public:
  explicit NeighborGenerator(const BuildingParams& params);

  const BuildingParams& params() const noexcept { return params_; }
  /// Σ_{j=1}^{n-1} [n, j]_p.
  std::size_t degree() const noexcept { return preimages_.size(); }

  /// All neighbours of `l`, sorted, each paired with the dimension j of the
  /// subspace of L/pL it comes from.
  std::vector<std::pair<LatticeClass, unsigned>> neighbors_with_dimension(const LatticeClass& l) const;
  std::vector<LatticeClass> neighbors(const LatticeClass& l) const;

  /// Whether two classes are joined by an edge.
  bool adjacent(const LatticeClass& a, const LatticeClass& b) const;

 private:
  struct Preimage {
    IntMatrix basis;
    unsigned dim;
  };

  BuildingParams params_;
  std::vector<Preimage> preimages_;
};

/// Convenience wrapper building a NeighborGenerator per call.
std::vector<LatticeClass> neighbors(const LatticeClass& l);

}  // namespace btlab
