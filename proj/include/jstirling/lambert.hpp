#pragma once

// Lambert W: the derivative numerator polynomials p_n, their relation to
// the Ramanujan polynomials, the rooted-tree series solution of
// w e^{-w} = y, and numeric validation of both derivative formulas.

#include <optional>
#include <stdexcept>
#include <vector>

#include "jstirling/poly.hpp"
#include "jstirling/positivity.hpp"

namespace jstirling {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// p_1 = 1, p_{n+1} = -(n x + 3n - 1) p_n + (1 + x) p_n'.
MultiPoly p_poly(unsigned n);

/// (-1)^{n-1} p_n(x) == sum_j r_j (1+x)^{n-1-j} where R_n(y) = sum_j r_j y^j.
bool p_identity_check(unsigned n);

/// Coefficients of (-1)^{n-1} p_n are positive, log-concave and unimodal.
CheckReport p_shape_check(unsigned n);

/// Power series in one variable truncated after v^N, exact coefficients.
class TruncatedSeries {
 public:
  TruncatedSeries(Var v, unsigned order);
  TruncatedSeries(Var v, std::vector<Rational> coeffs, unsigned order);

  Var variable() const { return var_; }
  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](unsigned i) const { return coeffs_.at(i); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  bool operator==(const TruncatedSeries& o) const;

  /// exp(s) for s with zero constant term; DomainError otherwise.
  TruncatedSeries exp() const;
  MultiPoly to_poly() const;

 private:
  void require_compatible(const TruncatedSeries& o) const;

  Var var_;
  unsigned order_;
  std::vector<Rational> coeffs_;  // size order_ + 1
};

/// sum_{n=1}^{N} n^{n-1} y^n / n!.
TruncatedSeries tree_series(unsigned big_n);

/// w_N exp(-w_N) == y modulo y^{N+1}.
bool tree_series_check(unsigned big_n);

/// Principal branch of w e^w = x0, x0 > -1/e.
double w_eval(double x0);
long double w_eval(long double x0);

struct NumericCheck {
  unsigned n = 0;
  Rational point;
  Rational step;
  double formula_value = 0;
  double fd_value = 0;
  double rel_err = 0;
};

/// Step used when none is given: small enough for the truncation error of
/// the central stencil, large enough for extended-precision roundoff.
Rational default_fd_step(unsigned n);

/// d^n W/dx^n = e^{-nW} p_n(W) / (1+W)^{2n-1} against a central difference.
NumericCheck derivative_formula_check(unsigned n, const Rational& x0,
                                      const std::optional<Rational>& h = std::nullopt);

/// For w e^{-w} = y: w^{(n)} = e^{nw} / (1-w)^n R_n(1/(1-w)), |y0| < 1/e.
NumericCheck derivative_formula_check_R(unsigned n, const Rational& y0,
                                        const std::optional<Rational>& h = std::nullopt);

}  // namespace jstirling
