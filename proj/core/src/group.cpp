#include "btlab/group.hpp"

#include "btlab/error.hpp"

namespace btlab {

GroupElement GroupElement::make(const BuildingParams& params, IntMatrix matrix) {
  if (matrix.rows() != params.n() || matrix.cols() != params.n()) {
    throw Error(ErrorKind::InvalidInput, "group element must be n x n");
  }
  const BigInt det = determinant(matrix);
  if (det == 0) throw Error(ErrorKind::RankDeficient, "singular matrix");
  auto k = p_power_exponent(det, params.prime());
  if (!k) throw Error(ErrorKind::NotCommensurable, "determinant " + to_string(det) + " is not ± a power of p");
  return GroupElement(params, std::move(matrix), *k);
}

GroupElement GroupElement::identity(const BuildingParams& params) {
  return GroupElement(params, IntMatrix::identity(params.n()), 0);
}

GroupElement GroupElement::diagonal(const BuildingParams& params, std::span<const unsigned> exponents) {
  if (exponents.size() != params.n()) throw Error(ErrorKind::InvalidInput, "need exactly n exponents");
  IntMatrix m(params.n(), params.n());
  unsigned total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    m(i, i) = ipow(params.prime(), exponents[i]);
    total += exponents[i];
  }
  return GroupElement(params, std::move(m), total);
}

GroupElement GroupElement::permutation(const BuildingParams& params, std::span<const std::size_t> perm) {
  const unsigned n = params.n();
  if (perm.size() != n) throw Error(ErrorKind::InvalidInput, "permutation must have n entries");
  IntMatrix m(n, n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || seen[perm[i]]) throw Error(ErrorKind::InvalidInput, "not a permutation");
    seen[perm[i]] = true;
    m(perm[i], i) = 1;
  }
  return GroupElement(params, std::move(m), 0);
}

GroupElement GroupElement::transvection(const BuildingParams& params, std::size_t row, std::size_t col, long long c) {
  const unsigned n = params.n();
  if (row >= n || col >= n || row == col) throw Error(ErrorKind::InvalidInput, "bad transvection indices");
  IntMatrix m = IntMatrix::identity(n);
  m(row, col) = c;
  return GroupElement(params, std::move(m), 0);
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  if (!(params_ == rhs.params_)) throw Error(ErrorKind::InvalidInput, "parameter mismatch");
  return GroupElement(params_, matrix_ * rhs.matrix_, det_valuation_ + rhs.det_valuation_);
}

BigInt default_precision_bound() { return BigInt(1) << 128; }

LatticeClass act(const GroupElement& g, const LatticeClass& l, const BigInt& bound) {
  if (!(g.params() == l.params())) throw Error(ErrorKind::InvalidInput, "parameter mismatch");
  IntMatrix image = g.matrix() * l.basis();
  for (const BigInt& v : image.data()) {
    if (abs(v) > bound) throw Error(ErrorKind::PrecisionOverflow, "entry exceeds the configured bound");
  }
  return canonicalize(g.params(), image);
}

GroupElement random_sl_word(const BuildingParams& params, std::size_t length, std::mt19937_64& rng) {
  const unsigned n = params.n();
  GroupElement g = GroupElement::identity(params);
  for (std::size_t k = 0; k < length; ++k) {
    const std::uint64_t draw = rng();
    const std::size_t row = draw % n;
    std::size_t col = (draw / n) % (n - 1);
    if (col >= row) ++col;
    const long long sign = ((draw / n / (n - 1)) & 1) ? 1 : -1;
    g = g * GroupElement::transvection(params, row, col, sign);
  }
  return g;
}

}  // namespace btlab
