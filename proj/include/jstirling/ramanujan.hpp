#pragma once

// Ramanujan polynomials R_n(y), Chapoton's generalized Ramanujan
// polynomials Q_n(x,y,z,t) and the y-coefficients Q_{n,k}(x,t) of
// Q_n(x,y,1,t).

#include <vector>

#include "jstirling/poly.hpp"

namespace jstirling {

/// R_1 = 1, R_{n+1} = n(1+y) R_n + y^2 R_n'.
MultiPoly ramanujan_R(unsigned n);

/// Q_1 = 1, Q_{n+1} = (x + n z) Q_n + (y + t)(n Q_n + y dQ_n/dy).
MultiPoly chapoton_Q(unsigned n);

/// Q_{n,k} by its own recurrence in n:
/// Q_{n,k} = [x + n-1 + t(n+k-1)] Q_{n-1,k} + (n+k-2) Q_{n-1,k-1}, Q_{1,0} = 1.
/// Zero outside 0 <= k <= n-1.
MultiPoly q_nk(unsigned n, long k);

/// Every monomial of Q_n has total degree n-1.
bool homogeneity_check(unsigned n);

/// Q_{m-1} Q_{n+1} - Q_m Q_n (n >= m >= 2).
MultiPoly q_logconvex_defect(unsigned m, unsigned n);

/// Cached Q_1..Q_{n_max} and the rows of Q_{n,k}.
class QFamily {
 public:
  explicit QFamily(unsigned n_max);

  unsigned n_max() const { return n_max_; }
  /// Q_n for 1 <= n <= n_max.
  const MultiPoly& Q(unsigned n) const;
  /// Q_{n,k}; zero outside 0 <= k <= n-1.
  MultiPoly Qnk(unsigned n, long k) const;
  /// Q_{n,0}, ..., Q_{n,n-1}.
  const std::vector<MultiPoly>& Qnk_row(unsigned n) const;

  MultiPoly defect(unsigned m, unsigned n) const;

 private:
  unsigned n_max_;
  std::vector<MultiPoly> q_;
  std::vector<std::vector<MultiPoly>> qnk_;
};

/// Q_{n,k} Q_{n,l}, the products used in the log-concavity argument.
MultiPoly u_product(unsigned n, long k, long l);

}  // namespace jstirling
