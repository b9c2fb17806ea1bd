#include "btlab/smith.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "btlab/error.hpp"

namespace btlab {
namespace {

using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;

std::int64_t checked_mul_sub(std::int64_t a, std::int64_t factor, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(factor, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw Error(ErrorKind::PrecisionOverflow, "sparse elimination entry exceeds 64 bits");
  }
  return out;
}

// target -= factor * pivot, both sorted by column.
Row row_combine(const Row& target, std::int64_t factor, const Row& pivot) {
  Row out;
  out.reserve(target.size() + pivot.size());
  auto t = target.begin();
  auto p = pivot.begin();
  while (t != target.end() || p != pivot.end()) {
    if (p == pivot.end() || (t != target.end() && t->first < p->first)) {
      out.push_back(*t++);
    } else if (t == target.end() || p->first < t->first) {
      out.emplace_back(p->first, checked_mul_sub(0, factor, p->second));
      ++p;
    } else {
      const std::int64_t v = checked_mul_sub(t->second, factor, p->second);
      if (v != 0) out.emplace_back(t->first, v);
      ++t;
      ++p;
    }
  }
  return out;
}

std::int64_t entry_at(const Row& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::uint32_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? it->second : 0;
}

void collect_torsion(const std::vector<BigInt>& diagonal, SmithInvariants& out) {
  for (const BigInt& d : diagonal) {
    ++out.rank;
    if (d > 1) out.torsion.push_back(d);
  }
}

}  // namespace

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<BigInt> diagonal;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the remaining block as pivot.
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (m(r, c) != 0 && (pr == rows || abs(m(r, c)) < abs(m(pr, pc)))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;
    for (std::size_t c = 0; c < cols; ++c) std::swap(m(t, c), m(pr, c));
    for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, t), m(r, pc));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        const BigInt q = floor_div(m(r, t), m(t, t));
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) {
          for (std::size_t c = t; c < cols; ++c) std::swap(m(t, c), m(r, c));
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        const BigInt q = floor_div(m(t, c), m(t, t));
        for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) {
          for (std::size_t r = t; r < rows; ++r) std::swap(m(r, t), m(r, c));
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      for (std::size_t r = t + 1; r < rows && clean; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m(r, c) % m(t, t) != 0) {
            for (std::size_t k = t; k < cols; ++k) m(t, k) += m(r, k);
            clean = false;
            break;
          }
        }
      }
    }
    diagonal.push_back(abs(m(t, t)));
    ++t;
  }
  return diagonal;
}

SmithInvariants smith_invariants(const SparseIntMatrix& input) {
  std::vector<Row> rows = input.entries;
  for (Row& row : rows) std::sort(row.begin(), row.end());
  std::vector<std::vector<std::uint32_t>> col_rows(input.cols);
  std::vector<std::size_t> col_count(input.cols, 0);
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) {
      col_rows[c].push_back(r);
      ++col_count[c];
    }
  }

  SmithInvariants out;
  std::vector<bool> row_done(rows.size(), false);
  using Key = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  for (std::uint32_t r = 0; r < rows.size(); ++r) queue.emplace(rows[r].size(), r);

  std::vector<std::uint32_t> deferred;
  bool progress = true;
  while (progress) {
    progress = false;
    while (!queue.empty()) {
      const auto [size, r] = queue.top();
      queue.pop();
      if (row_done[r] || size != rows[r].size()) continue;
      if (rows[r].empty()) {
        row_done[r] = true;
        continue;
      }
      // Unit entry in the sparsest column.
      std::uint32_t pivot_col = 0;
      std::int64_t pivot_val = 0;
      for (const auto& [c, v] : rows[r]) {
        if ((v == 1 || v == -1) && (pivot_val == 0 || col_count[c] < col_count[pivot_col])) {
          pivot_col = c;
          pivot_val = v;
        }
      }
      if (pivot_val == 0) {
        deferred.push_back(r);
        continue;
      }
      row_done[r] = true;
      ++out.rank;
      auto& candidates = col_rows[pivot_col];
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (std::uint32_t other : candidates) {
        if (row_done[other]) continue;
        const std::int64_t a = entry_at(rows[other], pivot_col);
        if (a == 0) continue;
        Row combined = row_combine(rows[other], a * pivot_val, rows[r]);
        for (const auto& [c, v] : rows[other]) --col_count[c];
        for (const auto& [c, v] : combined) {
          ++col_count[c];
          if (entry_at(rows[other], c) == 0) col_rows[c].push_back(other);
        }
        rows[other] = std::move(combined);
        queue.emplace(rows[other].size(), other);
      }
      for (const auto& [c, v] : rows[r]) --col_count[c];
      col_rows[pivot_col].clear();
      progress = true;
    }
    // Deferred rows may have gained unit entries since.
    std::vector<std::uint32_t> still;
    for (std::uint32_t r : deferred) {
      if (row_done[r]) continue;
      still.push_back(r);
      queue.emplace(rows[r].size(), r);
    }
    deferred.clear();
    if (!progress) {
      while (!queue.empty()) queue.pop();
      deferred = std::move(still);
    }
  }

  // Dense phase on the leftover rows and their live columns.
  std::vector<std::uint32_t> live_rows;
  for (std::uint32_t r : deferred) {
    if (!row_done[r] && !rows[r].empty()) live_rows.push_back(r);
  }
  std::sort(live_rows.begin(), live_rows.end());
  live_rows.erase(std::unique(live_rows.begin(), live_rows.end()), live_rows.end());
  if (live_rows.empty()) return out;
  std::vector<std::uint32_t> live_cols;
  for (std::uint32_t r : live_rows) {
    for (const auto& [c, v] : rows[r]) live_cols.push_back(c);
  }
  std::sort(live_cols.begin(), live_cols.end());
  live_cols.erase(std::unique(live_cols.begin(), live_cols.end()), live_cols.end());
  IntMatrix dense(live_rows.size(), live_cols.size());
  for (std::size_t i = 0; i < live_rows.size(); ++i) {
    for (const auto& [c, v] : rows[live_rows[i]]) {
      const auto j = std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin();
      dense(i, static_cast<std::size_t>(j)) = v;
    }
  }
  collect_torsion(smith_diagonal(std::move(dense)), out);
  return out;
}

}  // namespace btlab
