#include "jstirling/ramanujan.hpp"

#include <stdexcept>
#include <string>

namespace jstirling {

namespace {

MultiPoly next_Q(const MultiPoly& q, unsigned n) {
  const MultiPoly x = MultiPoly::var(Var::x);
  const MultiPoly y = MultiPoly::var(Var::y);
  const MultiPoly z = MultiPoly::var(Var::z);
  const MultiPoly t = MultiPoly::var(Var::t);
  const MultiPoly nn(static_cast<long>(n));
  return (x + nn * z) * q + (y + t) * (nn * q + y * derivative(q, Var::y));
}

std::vector<std::vector<MultiPoly>> qnk_rows(unsigned n_max) {
  const MultiPoly x = MultiPoly::var(Var::x);
  const MultiPoly t = MultiPoly::var(Var::t);
  std::vector<std::vector<MultiPoly>> rows(n_max + 1);
  if (n_max == 0) return rows;
  rows[1] = {MultiPoly(1)};
  for (unsigned n = 2; n <= n_max; ++n) {
    const auto& prev = rows[n - 1];
    auto& row = rows[n];
    row.resize(n);
    const long nl = static_cast<long>(n);
    for (long k = 0; k < nl; ++k) {
      MultiPoly v;
      if (k < nl - 1) v += (x + MultiPoly(nl - 1) + t * MultiPoly(nl + k - 1)) * prev[static_cast<std::size_t>(k)];
      if (k >= 1) v += MultiPoly(nl + k - 2) * prev[static_cast<std::size_t>(k - 1)];
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
  }
  return rows;
}

}  // namespace

MultiPoly ramanujan_R(unsigned n) {
  if (n == 0) throw std::invalid_argument("ramanujan_R requires n >= 1");
  const MultiPoly y = MultiPoly::var(Var::y);
  MultiPoly r(1);
  for (unsigned m = 1; m < n; ++m) {
    r = MultiPoly(static_cast<long>(m)) * (MultiPoly(1) + y) * r + y * y * derivative(r, Var::y);
  }
  return r;
}

MultiPoly chapoton_Q(unsigned n) { return QFamily(n).Q(n); }

MultiPoly q_nk(unsigned n, long k) {
  if (n == 0) throw std::invalid_argument("q_nk requires n >= 1");
  if (k < 0 || k >= static_cast<long>(n)) return {};
  return qnk_rows(n)[n][static_cast<std::size_t>(k)];
}

bool homogeneity_check(unsigned n) {
  const MultiPoly q = chapoton_Q(n);
  for (const auto& [m, c] : q.terms()) {
    if (m.degree() != n - 1) return false;
  }
  return true;
}

MultiPoly q_logconvex_defect(unsigned m, unsigned n) { return QFamily(n + 1).defect(m, n); }

QFamily::QFamily(unsigned n_max) : n_max_(n_max), q_(n_max + 1), qnk_(qnk_rows(n_max)) {
  if (n_max == 0) throw std::invalid_argument("QFamily requires n_max >= 1");
  q_[1] = MultiPoly(1);
  for (unsigned n = 1; n < n_max; ++n) q_[n + 1] = next_Q(q_[n], n);
}

const MultiPoly& QFamily::Q(unsigned n) const {
  if (n == 0 || n > n_max_) throw std::out_of_range("Q index " + std::to_string(n) + " outside family");
  return q_[n];
}

MultiPoly QFamily::Qnk(unsigned n, long k) const {
  const auto& row = Qnk_row(n);
  if (k < 0 || k >= static_cast<long>(row.size())) return {};
  return row[static_cast<std::size_t>(k)];
}

const std::vector<MultiPoly>& QFamily::Qnk_row(unsigned n) const {
  if (n == 0 || n > n_max_) throw std::out_of_range("Q_{n,k} row " + std::to_string(n) + " outside family");
  return qnk_[n];
}

MultiPoly QFamily::defect(unsigned m, unsigned n) const {
  if (m < 2 || n < m) throw std::invalid_argument("defect requires n >= m >= 2");
  return Q(m - 1) * Q(n + 1) - Q(m) * Q(n);
}

MultiPoly u_product(unsigned n, long k, long l) { return q_nk(n, k) * q_nk(n, l); }

}  // namespace jstirling
