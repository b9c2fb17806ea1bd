#include "btlab/hermite.hpp"

#include <utility>
#include <vector>

#include "btlab/error.hpp"

namespace btlab {
namespace {

using Column = std::vector<BigInt>;

void subtract_multiple(Column& target, const Column& source, const BigInt& q, std::size_t from_row) {
  for (std::size_t r = from_row; r < target.size(); ++r) {
    if (source[r] != 0) target[r] -= q * source[r];
  }
}

}  // namespace

IntMatrix column_hermite_form(const IntMatrix& generators) {
  const std::size_t n = generators.rows();
  std::vector<Column> cols;
  cols.reserve(generators.cols());
  for (std::size_t c = 0; c < generators.cols(); ++c) {
    Column col = generators.column(c);
    bool zero = true;
    for (const auto& v : col) zero = zero && v == 0;
    if (!zero) cols.push_back(std::move(col));
  }
  if (cols.size() < n) throw Error(ErrorKind::RankDeficient, "fewer than n independent generators");

  // Columns [0, i) are finished pivots; columns [i, end) have zeros above row i.
  for (std::size_t i = 0; i < n; ++i) {
    // Euclid across columns on row i: repeatedly move the smallest nonzero
    // entry to column i and reduce the others against it.
    while (true) {
      std::size_t best = cols.size();
      for (std::size_t j = i; j < cols.size(); ++j) {
        if (cols[j][i] == 0) continue;
        if (best == cols.size() || abs(cols[j][i]) < abs(cols[best][i])) best = j;
      }
      if (best == cols.size()) throw Error(ErrorKind::RankDeficient, "generators do not span Q^n");
      std::swap(cols[i], cols[best]);
      bool clean = true;
      for (std::size_t j = i + 1; j < cols.size(); ++j) {
        if (cols[j][i] == 0) continue;
        const BigInt q = cols[j][i] / cols[i][i];
        subtract_multiple(cols[j], cols[i], q, i);
        if (cols[j][i] != 0) clean = false;
      }
      if (clean) break;
    }
    if (cols[i][i] < 0) {
      for (std::size_t r = i; r < n; ++r) cols[i][r] = -cols[i][r];
    }
    for (std::size_t j = 0; j < i; ++j) {
      const BigInt q = floor_div(cols[j][i], cols[i][i]);
      if (q != 0) subtract_multiple(cols[j], cols[i], q, i);
    }
    // Drop columns that became zero so later rows scan less.
    std::size_t keep = i + 1;
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      bool zero = true;
      for (std::size_t r = i + 1; r < n && zero; ++r) zero = cols[j][r] == 0;
      if (!zero) {
        if (keep != j) cols[keep] = std::move(cols[j]);
        ++keep;
      }
    }
    cols.resize(keep);
    if (cols.size() < n) {
      throw Error(ErrorKind::RankDeficient, "generators do not span Q^n");
    }
  }

  IntMatrix out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) out(r, c) = cols[c][r];
  }
  return out;
}

}  // namespace btlab
