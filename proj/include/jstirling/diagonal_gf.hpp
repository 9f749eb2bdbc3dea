#pragma once

// Diagonals f_k(n;z) = JS(k+n, n; z) of the second-kind triangle, the
// numerators A_k(x;z) of their generating functions
//
//   F_k(x;z) = sum_n f_k(n;z) x^n = A_k(x;z) / (1-x)^{3k+1},
//
// the companion polynomials B_k(x;z), and exact root analysis of A_k at
// rational z.

#include <vector>

#include "jstirling/jacobi_stirling.hpp"
#include "jstirling/poly.hpp"
#include "jstirling/roots.hpp"

namespace jstirling {

struct DiagonalPoly {
  unsigned k = 0;
  MultiPoly poly;  // in n and z
};

struct NumeratorA {
  unsigned k = 0;
  /// a_{k,i}(z) for i = 0..2k; a_{k,0} = 0 once k >= 1.
  std::vector<MultiPoly> coeffs;
  /// A_k as a polynomial in x and z.
  MultiPoly poly() const;
};

/// Closed form of f_k in (n, z), by summing f_k(n) - f_k(n-1) = n(n+z) f_{k-1}(n)
/// in the falling-factorial basis, anchored at f_k(0) = 0 (k >= 1), f_0 = 1.
DiagonalPoly diagonal_poly(unsigned k);

/// g(n) -> G(n) with G(n) - G(n-1) = g(n) and G(0) = 0. `g` may involve other variables.
MultiPoly indefinite_sum(const MultiPoly& g, Var n);

/// Coefficients by the three-term recurrence in k, cross-checked against the
/// truncated series (sum_{n<=2k} f_k(n) x^n)(1-x)^{3k+1}; ConsistencyError on mismatch.
NumeratorA numerator_A(unsigned k);

/// The recurrence route alone.
std::vector<MultiPoly> numerator_A_recurrence(unsigned k);
/// The series route alone, with f_k(n) read from the JS triangle.
std::vector<MultiPoly> numerator_A_series(unsigned k);

/// B_k = z(1-x)A_k + x[(3k+1)A_k + (1-x) dA_k/dx]
MultiPoly companion_B(unsigned k);

/// Reference evaluation of B_k at an integer z0 >= 0 where x^{z0} is a genuine
/// polynomial: (1-x)^{3k+2} x^{1-z0} D(x^{z0} (1-x)^{-1-3k} A_k), computed with the
/// quotient rule and exact polynomial division. Used to validate companion_B.
MultiPoly companion_B_reference(unsigned k, long z0);

/// A_k == x[(3k-1)B_{k-1} + (1-x) dB_{k-1}/dx] (k >= 1).
bool A_from_B_check(unsigned k);

/// {js(n, n-k; z)}_{n=k..N}; each term verified against (-1)^k f_k(-n; -z).
std::vector<MultiPoly> first_kind_diagonal(unsigned k, unsigned big_n);

/// Exact root analysis of A_k(x; z0).
RootReport root_analysis(unsigned k, const Rational& z0);

}  // namespace jstirling
