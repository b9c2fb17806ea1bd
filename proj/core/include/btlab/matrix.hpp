#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "btlab/bigint.hpp"

namespace btlab {

/// Dense row-major integer matrix. Small sizes only (n x n lattice bases).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of equal length).
  static IntMatrix from_columns(const std::vector<std::vector<BigInt>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<BigInt>& data() const noexcept { return data_; }

  std::vector<BigInt> column(std::size_t c) const;

  IntMatrix operator*(const IntMatrix& rhs) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Row-major lexicographic comparison; shapes compared first.
  friend int compare(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

}  // namespace btlab
