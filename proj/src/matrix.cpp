#include "jstirling/matrix.hpp"

#include <string>

namespace jstirling {

namespace {

void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols) {
    throw NonSquareError("determinant of a " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " matrix");
  }
}

template <typename T>
T small_det(const Matrix<T>& m) {
  switch (m.rows()) {
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    default:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
}

bool is_zero(const MultiPoly& p) { return p.is_zero(); }
bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Fraction-free elimination: after step k every entry of the trailing block
// is a (k+1)x(k+1) minor of the input, so the division by the previous
// pivot is exact in any integral domain.
template <typename T, typename Div>
T bareiss(Matrix<T> a, Div divide) {
  const std::size_t n = a.rows();
  bool negate = false;
  T prev_pivot = T(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(a(swap_row, k))) ++swap_row;
      if (swap_row == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = divide(num, prev_pivot);
      }
      a(i, k) = T(0);
    }
    prev_pivot = a(k, k);
  }
  T result = a(n - 1, n - 1);
  if (negate) result = -result;
  return result;
}

}  // namespace

MultiPoly det_bareiss(const PolyMatrix& m) {
  require_square(m.rows(), m.cols());
  return bareiss(m, [](const MultiPoly& a, const MultiPoly& b) { return exact_quotient(a, b); });
}

MultiPoly det(const PolyMatrix& m) {
  require_square(m.rows(), m.cols());
  if (m.rows() <= 3) return small_det(m);
  return det_bareiss(m);
}

Rational det(const RationalMatrix& m) {
  require_square(m.rows(), m.cols());
  if (m.rows() <= 3) return small_det(m);
  return bareiss(m, [](const Rational& a, const Rational& b) { return Rational(a / b); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      MultiPoly acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

PolyMatrix identity_matrix(std::size_t n) {
  PolyMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = MultiPoly(1);
  return out;
}

}  // namespace jstirling
