#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "divgraph/bitmatrix.hpp"

namespace divgraph {

/// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Small-integer matrix. Every caller in this project feeds entries of
/// magnitude at most a few units (adjacency minus a small shift); the exact
/// routines promote to arbitrary precision internally.
using IntMatrix = DenseMatrix<std::int64_t>;

inline IntMatrix to_int_matrix(const BitMatrix& adj) {
  IntMatrix m(adj.size(), adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = 0; j < adj.size(); ++j) m(i, j) = adj.test(i, j) ? 1 : 0;
  return m;
}

/// M - shift * I.
inline IntMatrix shifted(const IntMatrix& m, std::int64_t shift) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) out(i, i) -= shift;
  return out;
}

}  // namespace divgraph
