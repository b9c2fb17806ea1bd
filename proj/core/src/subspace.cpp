#include "btlab/subspace.hpp"

#include <algorithm>

#include "btlab/error.hpp"

namespace btlab {

FpSubspace::FpSubspace(const BuildingParams& params, std::vector<Row> rref)
    : params_(params), rref_(std::move(rref)) {
  const unsigned n = params_.n();
  if (rref_.empty() || rref_.size() >= n) {
    throw Error(ErrorKind::DimensionOutOfRange, "subspace dimension must lie in [1, n-1]");
  }
  std::size_t last_pivot = 0;
  for (std::size_t r = 0; r < rref_.size(); ++r) {
    const Row& row = rref_[r];
    if (row.size() != n) throw Error(ErrorKind::InvalidInput, "rref row has wrong length");
    auto it = std::find_if(row.begin(), row.end(), [](std::uint64_t v) { return v != 0; });
    if (it == row.end() || *it != 1) throw Error(ErrorKind::InvalidInput, "rref row lacks a unit pivot");
    const auto pivot = static_cast<std::size_t>(it - row.begin());
    if (r > 0 && pivot <= last_pivot) throw Error(ErrorKind::InvalidInput, "rref pivots not increasing");
    last_pivot = pivot;
    for (std::uint64_t v : row) {
      if (v >= params_.p()) throw Error(ErrorKind::InvalidInput, "rref entry out of range");
    }
    for (std::size_t other = 0; other < rref_.size(); ++other) {
      if (other != r && rref_[other][pivot] != 0) {
        throw Error(ErrorKind::InvalidInput, "rref pivot column not cleared");
      }
    }
  }
}

std::vector<std::size_t> FpSubspace::pivots() const {
  std::vector<std::size_t> out;
  for (const Row& row : rref_) {
    out.push_back(static_cast<std::size_t>(
        std::find_if(row.begin(), row.end(), [](std::uint64_t v) { return v != 0; }) - row.begin()));
  }
  return out;
}

BigInt gaussian_binomial(unsigned n, unsigned j, std::uint64_t p) {
  if (j > n) return 0;
  const BigInt q = p;
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (unsigned i = 0; i < j; ++i) {
    numerator *= ipow(q, n - i) - 1;
    denominator *= ipow(q, j - i) - 1;
  }
  return numerator / denominator;
}

std::vector<FpSubspace> enumerate_subspaces(const BuildingParams& params, unsigned j) {
  const unsigned n = params.n();
  const std::uint64_t p = params.p();
  if (j < 1 || j >= n) throw Error(ErrorKind::DimensionOutOfRange, "j must lie in [1, n-1]");

  std::vector<FpSubspace> out;
  std::vector<std::size_t> pivots(j);
  for (unsigned i = 0; i < j; ++i) pivots[i] = i;

  while (true) {
    // Free positions: right of the row's pivot and not a pivot column.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (unsigned r = 0; r < j; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      }
    }
    std::vector<std::uint64_t> digits(free.size(), 0);
    while (true) {
      std::vector<FpSubspace::Row> rows(j, FpSubspace::Row(n, 0));
      for (unsigned r = 0; r < j; ++r) rows[r][pivots[r]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = digits[f];
      out.emplace_back(params, std::move(rows));

      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }

    // Next pivot combination.
    int r = static_cast<int>(j) - 1;
    while (r >= 0 && pivots[r] == n - j + static_cast<unsigned>(r)) --r;
    if (r < 0) break;
    ++pivots[r];
    for (unsigned s = static_cast<unsigned>(r) + 1; s < j; ++s) pivots[s] = pivots[s - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace btlab
