#pragma once

// Jacobi-Stirling numbers js(n,k;z) (first kind) and JS(n,k;z) (second
// kind) as polynomials in z, together with their classical specializations
// and the connection/inversion identities between the two triangles.

#include <stdexcept>
#include <vector>

#include "jstirling/matrix.hpp"
#include "jstirling/poly.hpp"

namespace jstirling {

enum class TriangleKind { FirstKind, SecondKind };

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Immutable triangle of entries (n,k), 0 <= n,k <= max_n, built by the
/// defining recurrence:
///   js(n,k) = js(n-1,k-1) + (n-1)(n-1+z) js(n-1,k)
///   JS(n,k) = JS(n-1,k-1) + k(k+z) JS(n-1,k)
/// Entries outside 0 <= k <= n are zero. Integrality is asserted on build.
class TriangleTable {
 public:
  TriangleTable(TriangleKind kind, unsigned max_n);

  TriangleKind kind() const { return kind_; }
  unsigned max_n() const { return max_n_; }

  /// Entry (n,k); zero for k > n. Throws std::out_of_range past max_n.
  const MultiPoly& at(unsigned n, unsigned k) const;

 private:
  TriangleKind kind_;
  unsigned max_n_;
  std::vector<std::vector<MultiPoly>> rows_;
};

MultiPoly js_second(unsigned n, unsigned k);
MultiPoly js_first(unsigned n, unsigned k);

/// JS(n,k;z) = h_{n-k}(1(1+z), ..., k(k+z)). Requires n >= k.
MultiPoly js_second_via_h(unsigned n, unsigned k);
/// js(n,k;z) = e_{n-k}(1(1+z), ..., (n-1)(n-1+z)). Requires n >= k.
MultiPoly js_first_via_e(unsigned n, unsigned k);

/// prod_{i=0}^{n-1} (y + i(z+i)), whose y^k coefficient is js(n,k;z).
MultiPoly first_kind_product(unsigned n);

/// x^n == sum_k JS(n,k;z) prod_{i<k} (x - i(z+i)) as polynomials in x, z.
bool connection_check(unsigned n);

/// (JS(n,k;z)) * ((-1)^{n+k} js(n,k;z)) == I on the (N+1)x(N+1) leading block.
bool inversion_check(unsigned big_n);

/// Leading (size x size) block of the triangle as a matrix, optionally with
/// z shifted by `z_shift` (z <- z + z_shift) and (-1)^{n+k} signs.
PolyMatrix triangle_matrix(TriangleKind kind, unsigned size, long z_shift = 0, bool signed_entries = false);

enum class CentralKind { Second /* T(2n,2k) */, First /* t(2n,2k) */ };
/// T(2n,2k) = JS(n,k;0) and t(2n,2k) = js(n,k;0).
Integer central_factorial(unsigned n, unsigned k, CentralKind kind);

Integer stirling2(unsigned n, unsigned k);
/// Row n of the Stirling triangle, S(n,0..n).
std::vector<Integer> stirling2_row(unsigned n);

/// B_n(y) = sum_k S(n,k) y^k.
MultiPoly bell_poly(unsigned n);

/// J_n(z,y) = sum_k JS(n,k;z) y^k.
MultiPoly generating_J(unsigned n);

/// z <- z + offset on a polynomial in z.
MultiPoly shift_z(const MultiPoly& p, long offset);

}  // namespace jstirling
