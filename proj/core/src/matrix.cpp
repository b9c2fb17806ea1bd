#include "btlab/matrix.hpp"

#include <sstream>
#include <utility>

#include "btlab/error.hpp"

namespace btlab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::InvalidInput, "ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<BigInt>>& columns) {
  if (columns.empty()) return {};
  const std::size_t rows = columns.front().size();
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::InvalidInput, "generator columns differ in length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
  std::vector<BigInt> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::InvalidInput, "matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const BigInt& b = rhs(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

int compare(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_ ? -1 : 1;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_ ? -1 : 1;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    const int c = a.data_[i].compare(b.data_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c);
    out << ']';
  }
  out << ']';
  return out.str();
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace btlab
