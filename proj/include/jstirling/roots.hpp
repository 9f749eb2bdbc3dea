#pragma once

// Exact real-root analysis of univariate polynomials with rational
// coefficients: square-free decomposition, Sturm sequences, and root
// isolation by rational bisection.

#include <utility>
#include <vector>

#include "jstirling/poly.hpp"

namespace jstirling {

/// Dense univariate polynomial, coefficients ascending; no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly from_multi(const MultiPoly& p, Var v);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;

  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator-(const UPoly& a);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of a / b (b nonzero).
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);

/// Square-free decomposition p = c * prod_i f_i^i (Yun). Entry i-1 holds f_i.
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

/// Sturm sequence of a square-free polynomial.
std::vector<UPoly> sturm_sequence(const UPoly& p);

/// Number of distinct real roots of a square-free p in the half-open (a, b].
/// Either end may be infinite.
struct Bound {
  enum class Kind { NegInf, Finite, PosInf } kind = Kind::Finite;
  Rational value;
  static Bound neg_inf() { return {Kind::NegInf, 0}; }
  static Bound pos_inf() { return {Kind::PosInf, 0}; }
  static Bound at(const Rational& v) { return {Kind::Finite, v}; }
};
int count_roots(const std::vector<UPoly>& sturm, const Bound& lo, const Bound& hi);

struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact = false;  // lo == hi is a root
  unsigned multiplicity = 1;
};

struct RootReport {
  UPoly poly;
  int degree = -1;
  int real_root_count = 0;          // with multiplicity
  int distinct_real_root_count = 0;
  int nonpositive_real_root_count = 0;  // with multiplicity, zero counted here
  int positive_real_root_count = 0;     // with multiplicity
  bool distinct = true;             // square-free
  bool has_positive_real_root = false;
  bool all_real() const { return real_root_count == degree; }
  bool all_real_nonpositive() const { return all_real() && !has_positive_real_root; }
  std::vector<RootInterval> roots;  // isolating intervals, ascending
  std::vector<Rational> rational_roots;
};

/// Full analysis; `isolation_width` bounds the width of reported intervals.
RootReport analyze_roots(const UPoly& p, const Rational& isolation_width = Rational(1, 1 << 20));

}  // namespace jstirling
