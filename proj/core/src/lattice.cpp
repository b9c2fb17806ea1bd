#include "btlab/lattice.hpp"

#include <algorithm>

#include "btlab/error.hpp"
#include "btlab/hermite.hpp"

namespace btlab {

LatticeClass::LatticeClass(const BuildingParams& params, IntMatrix basis, std::vector<unsigned> exponents)
    : params_(params), basis_(std::move(basis)), diagonal_exponents_(std::move(exponents)) {
  for (unsigned e : diagonal_exponents_) index_exponent_ += e;
  std::size_t h = 0xcbf29ce484222325ull;
  for (const BigInt& v : basis_.data()) h = (h ^ hash_value(v)) * 0x100000001b3ull;
  hash_ = h;
}

LatticeClass canonicalize(const BuildingParams& params, const IntMatrix& generators) {
  const unsigned n = params.n();
  if (generators.rows() != n) throw Error(ErrorKind::InvalidInput, "generators must have n rows");
  IntMatrix h = column_hermite_form(generators);

  const BigInt& p = params.prime();
  std::vector<unsigned> exponents(n);
  for (unsigned i = 0; i < n; ++i) {
    auto e = p_power_exponent(h(i, i), p);
    if (!e) {
      throw Error(ErrorKind::NotCommensurable,
                  "index has a factor prime to p (diagonal entry " + to_string(h(i, i)) + ")");
    }
    exponents[i] = *e;
  }

  // Homothety: divide by the largest power of p dividing every entry, so that
  // L ⊆ Z^n and L ⊄ pZ^n. The result is again in Hermite form.
  unsigned shift = *std::min_element(exponents.begin(), exponents.end());
  for (unsigned r = 0; r < n && shift > 0; ++r) {
    for (unsigned c = 0; c < r && shift > 0; ++c) {
      if (h(r, c) != 0) shift = std::min(shift, valuation(h(r, c), p));
    }
  }
  if (shift > 0) {
    const BigInt scale = ipow(p, shift);
    for (unsigned r = 0; r < n; ++r) {
      for (unsigned c = 0; c <= r; ++c) h(r, c) /= scale;
    }
    for (unsigned& e : exponents) e -= shift;
  }
  return LatticeClass(params, std::move(h), std::move(exponents));
}

LatticeClass standard_class(const BuildingParams& params) {
  return canonicalize(params, IntMatrix::identity(params.n()));
}

LatticeClass diagonal_class(const BuildingParams& params, std::span<const long long> exponents) {
  const unsigned n = params.n();
  if (exponents.size() != n) throw Error(ErrorKind::InvalidInput, "need exactly n exponents");
  const long long low = *std::min_element(exponents.begin(), exponents.end());
  IntMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i) m(i, i) = ipow(params.prime(), static_cast<unsigned>(exponents[i] - low));
  return canonicalize(params, m);
}

int lattice_type(const LatticeClass& l) { return static_cast<int>(l.index_exponent() % l.params().n()); }

NeighborGenerator::NeighborGenerator(const BuildingParams& params) : params_(params) {
  const unsigned n = params.n();
  for (unsigned j = 1; j < n; ++j) {
    for (const FpSubspace& w : enumerate_subspaces(params, j)) {
      // Preimage of W in Z^n: lifts of the rref rows together with pZ^n.
      IntMatrix gens(n, n + j);
      for (unsigned i = 0; i < n; ++i) gens(i, i) = params.prime();
      for (unsigned r = 0; r < j; ++r) {
        for (unsigned i = 0; i < n; ++i) gens(i, n + r) = w.rref()[r][i];
      }
      preimages_.push_back({column_hermite_form(gens), j});
    }
  }
}

std::vector<std::pair<LatticeClass, unsigned>> NeighborGenerator::neighbors_with_dimension(
    const LatticeClass& l) const {
  if (!(l.params() == params_)) throw Error(ErrorKind::InvalidInput, "parameter mismatch");
  std::vector<std::pair<LatticeClass, unsigned>> out;
  out.reserve(preimages_.size());
  for (const Preimage& pre : preimages_) {
    out.emplace_back(canonicalize(params_, l.basis() * pre.basis), pre.dim);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<LatticeClass> NeighborGenerator::neighbors(const LatticeClass& l) const {
  auto tagged = neighbors_with_dimension(l);
  std::vector<LatticeClass> out;
  out.reserve(tagged.size());
  for (auto& [cls, dim] : tagged) out.push_back(std::move(cls));
  return out;
}

bool NeighborGenerator::adjacent(const LatticeClass& a, const LatticeClass& b) const {
  if (lattice_type(a) == lattice_type(b)) return false;
  for (const Preimage& pre : preimages_) {
    if (canonicalize(params_, a.basis() * pre.basis) == b) return true;
  }
  return false;
}

std::vector<LatticeClass> neighbors(const LatticeClass& l) { return NeighborGenerator(l.params()).neighbors(l); }

}  // namespace btlab
