#include "jstirling/jacobi_stirling.hpp"

#include <string>

#include "jstirling/symfun.hpp"

namespace jstirling {

namespace {

const MultiPoly& zero_poly() {
  static const MultiPoly zero;
  return zero;
}

MultiPoly weight(long i) { return MultiPoly(i) * (MultiPoly::var(Var::z) + MultiPoly(i)); }

}  // namespace

TriangleTable::TriangleTable(TriangleKind kind, unsigned max_n)
    : kind_(kind), max_n_(max_n), rows_(max_n + 1) {
  rows_[0] = {MultiPoly(1)};
  for (unsigned n = 1; n <= max_n; ++n) {
    auto& row = rows_[n];
    const auto& prev = rows_[n - 1];
    row.resize(n + 1);
    const MultiPoly first_weight = weight(static_cast<long>(n) - 1);
    for (unsigned k = 1; k <= n; ++k) {
      MultiPoly v = prev[k - 1];
      if (k < n) {
        const MultiPoly& w = kind == TriangleKind::FirstKind ? first_weight : weight(k);
        v += w * prev[k];
      }
      if (!v.is_integral()) {
        throw ConsistencyError("non-integral triangle entry at (" + std::to_string(n) + "," +
                               std::to_string(k) + "): " + v.to_string());
      }
      row[k] = std::move(v);
    }
  }
}

const MultiPoly& TriangleTable::at(unsigned n, unsigned k) const {
  if (n > max_n_) throw std::out_of_range("triangle row " + std::to_string(n) + " beyond max_n");
  if (k > n) return zero_poly();
  return rows_[n][k];
}

MultiPoly js_second(unsigned n, unsigned k) { return TriangleTable(TriangleKind::SecondKind, n).at(n, k); }

MultiPoly js_first(unsigned n, unsigned k) { return TriangleTable(TriangleKind::FirstKind, n).at(n, k); }

MultiPoly js_second_via_h(unsigned n, unsigned k) {
  if (n < k) throw std::invalid_argument("js_second_via_h requires n >= k");
  return homogeneous(n - k, jacobi_weights(k));
}

MultiPoly js_first_via_e(unsigned n, unsigned k) {
  if (n < k) throw std::invalid_argument("js_first_via_e requires n >= k");
  if (n == 0) return MultiPoly(1);
  return elementary(n - k, jacobi_weights(n - 1));
}

MultiPoly first_kind_product(unsigned n) {
  MultiPoly acc(1);
  const MultiPoly y = MultiPoly::var(Var::y);
  for (unsigned i = 0; i < n; ++i) acc *= y + weight(i);
  return acc;
}

bool connection_check(unsigned n) {
  const TriangleTable js(TriangleKind::SecondKind, n);
  const MultiPoly x = MultiPoly::var(Var::x);
  MultiPoly rhs;
  MultiPoly basis(1);  // prod_{i<k} (x - i(z+i))
  for (unsigned k = 0; k <= n; ++k) {
    rhs += js.at(n, k) * basis;
    basis *= x - weight(k);
  }
  return rhs == pow(x, n);
}

PolyMatrix triangle_matrix(TriangleKind kind, unsigned size, long z_shift, bool signed_entries) {
  const TriangleTable t(kind, size - 1);
  PolyMatrix m(size, size);
  for (unsigned n = 0; n < size; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      MultiPoly v = z_shift == 0 ? t.at(n, k) : shift_z(t.at(n, k), z_shift);
      if (signed_entries && (n + k) % 2 == 1) v = -v;
      m(n, k) = std::move(v);
    }
  }
  return m;
}

bool inversion_check(unsigned big_n) {
  const PolyMatrix second = triangle_matrix(TriangleKind::SecondKind, big_n + 1);
  const PolyMatrix first = triangle_matrix(TriangleKind::FirstKind, big_n + 1, 0, true);
  return second * first == identity_matrix(big_n + 1);
}

Integer central_factorial(unsigned n, unsigned k, CentralKind kind) {
  if (n < k) throw std::invalid_argument("central_factorial requires n >= k");
  const MultiPoly v = kind == CentralKind::Second ? js_second(n, k) : js_first(n, k);
  return v.constant_term().get_num();
}

std::vector<Integer> stirling2_row(unsigned n) {
  std::vector<Integer> row{1};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<Integer> next(m + 1);
    for (unsigned k = 1; k <= m; ++k) {
      next[k] = row[k - 1];
      if (k < m) next[k] += Integer(k) * row[k];
    }
    row = std::move(next);
  }
  return row;
}

Integer stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  return stirling2_row(n)[k];
}

MultiPoly bell_poly(unsigned n) {
  const auto row = stirling2_row(n);
  std::vector<Rational> coeffs(row.begin(), row.end());
  return MultiPoly::from_coefficients(Var::y, coeffs);
}

MultiPoly generating_J(unsigned n) {
  const TriangleTable t(TriangleKind::SecondKind, n);
  MultiPoly out;
  for (unsigned k = 0; k <= n; ++k) {
    out += t.at(n, k) * MultiPoly::term(1, Monomial::of(Var::y, k));
  }
  return out;
}

MultiPoly shift_z(const MultiPoly& p, long offset) {
  return substitute(p, Var::z, MultiPoly::var(Var::z) + MultiPoly(offset));
}

}  // namespace jstirling
