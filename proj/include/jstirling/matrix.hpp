#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jstirling/poly.hpp"

namespace jstirling {

class NonSquareError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major rectangular matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be >= 1");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Submatrix picked out by ascending row/column index lists.
  Matrix submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const {
    Matrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
      for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<MultiPoly>;
using RationalMatrix = Matrix<Rational>;

/// Exact determinant. Sizes up to 3 use the explicit expansion; larger
/// matrices use fraction-free (Bareiss) elimination with exact division.
MultiPoly det(const PolyMatrix& m);
Rational det(const RationalMatrix& m);

/// Bareiss elimination regardless of size (exposed for tests).
MultiPoly det_bareiss(const PolyMatrix& m);

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix identity_matrix(std::size_t n);

}  // namespace jstirling
