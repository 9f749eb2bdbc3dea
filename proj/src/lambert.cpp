#include "jstirling/lambert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jstirling/jacobi_stirling.hpp"
#include "jstirling/ramanujan.hpp"

namespace jstirling {

MultiPoly p_poly(unsigned n) {
  if (n == 0) throw std::invalid_argument("p_poly requires n >= 1");
  const MultiPoly x = MultiPoly::var(Var::x);
  MultiPoly p(1);
  for (unsigned m = 1; m < n; ++m) {
    const long ml = static_cast<long>(m);
    p = -(MultiPoly(ml) * x + MultiPoly(3 * ml - 1)) * p + (MultiPoly(1) + x) * derivative(p, Var::x);
  }
  return p;
}

namespace {

MultiPoly signed_p(unsigned n) {
  MultiPoly p = p_poly(n);
  return n % 2 == 1 ? p : -p;
}

}  // namespace

bool p_identity_check(unsigned n) {
  const auto r = ramanujan_R(n).univariate_coefficients(Var::y);
  const MultiPoly one_plus_x = MultiPoly(1) + MultiPoly::var(Var::x);
  MultiPoly rhs;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] == 0) continue;
    rhs += MultiPoly(r[j]) * pow(one_plus_x, n - 1 - static_cast<unsigned>(j));
  }
  return rhs == signed_p(n);
}

CheckReport p_shape_check(unsigned n) {
  const auto c = signed_p(n).univariate_coefficients(Var::x);
  CheckReport rep;
  rep.check = "p_shape";
  rep.scope = {2, c.size()};
  auto refute = [&](std::vector<std::size_t> rows, std::vector<std::size_t> cols, const Rational& value,
                    const char* note) {
    rep.verdict = Verdict::Refuted;
    rep.witness = MinorWitness{std::move(rows), std::move(cols), MultiPoly(value)};
    rep.note = note;
    return rep;
  };

  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) <= 0) return refute({i}, {i}, c[i], "coefficient not positive");
  }
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    const Rational d = c[i] * c[i] - c[i - 1] * c[i + 1];
    if (sgn(d) < 0) return refute({i - 1, i}, {i, i + 1}, d, "not log-concave");
  }
  // Positive and log-concave forces a single peak.
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  if (i + 1 != c.size()) {
    throw ConsistencyError("p_" + std::to_string(n) + ": positive log-concave sequence is not unimodal");
  }
  return rep;
}

TruncatedSeries::TruncatedSeries(Var v, unsigned order) : var_(v), order_(order), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(Var v, std::vector<Rational> coeffs, unsigned order)
    : var_(v), order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order_ + 1);
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o) const {
  if (var_ != o.var_ || order_ != o.order_) throw std::invalid_argument("incompatible truncated series");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_compatible(o);
  for (unsigned i = 0; i <= order_; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_compatible(o);
  for (unsigned i = 0; i <= order_; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b);
  TruncatedSeries out(a.var_, a.order_);
  for (unsigned i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (unsigned j = 0; i + j <= a.order_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  return var_ == o.var_ && order_ == o.order_ && coeffs_ == o.coeffs_;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (coeffs_[0] != 0) throw DomainError("exp of a truncated series needs a zero constant term");
  // e = exp(s) satisfies e' = s' e, i.e. m e_m = sum_{k=1}^{m} k s_k e_{m-k}.
  TruncatedSeries e(var_, order_);
  e.coeffs_[0] = 1;
  for (unsigned m = 1; m <= order_; ++m) {
    Rational acc;
    for (unsigned k = 1; k <= m; ++k) {
      if (coeffs_[k] != 0) acc += Rational(k) * coeffs_[k] * e.coeffs_[m - k];
    }
    e.coeffs_[m] = acc / m;
  }
  return e;
}

MultiPoly TruncatedSeries::to_poly() const { return MultiPoly::from_coefficients(var_, coeffs_); }

TruncatedSeries tree_series(unsigned big_n) {
  std::vector<Rational> c(big_n + 1);
  Integer fact = 1;
  for (unsigned n = 1; n <= big_n; ++n) {
    fact *= n;
    Integer num;
    mpz_ui_pow_ui(num.get_mpz_t(), n, n - 1);
    c[n] = Rational(num, fact);
    c[n].canonicalize();
  }
  return TruncatedSeries(Var::y, std::move(c), big_n);
}

bool tree_series_check(unsigned big_n) {
  if (big_n == 0) throw std::invalid_argument("tree_series_check requires N >= 1");
  const TruncatedSeries w = tree_series(big_n);
  const TruncatedSeries lhs = w * (-w).exp();
  std::vector<Rational> c(big_n + 1);
  c[1] = 1;
  return lhs == TruncatedSeries(Var::y, std::move(c), big_n);
}

namespace {

template <typename F>
F lambert_w(F x) {
  const F e = std::exp(F(1));
  if (!(x > -1 / e)) throw DomainError("w e^w = x needs x > -1/e");
  if (x == 0) return 0;
  F w;
  if (x < F(-0.25)) {
    const F p = std::sqrt(2 * (e * x + 1));
    w = -1 + p - p * p / 3 + F(11) / 72 * p * p * p;
  } else if (x < 3) {
    w = std::log1p(x);
  } else {
    const F l1 = std::log(x);
    const F l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }
  const F eps = std::numeric_limits<F>::epsilon();
  for (int iter = 0; iter < 100; ++iter) {
    const F ew = std::exp(w);
    const F f = w * ew - x;
    const F wp1 = w + 1;
    if (wp1 == 0) break;
    const F step = f / (ew * wp1 - (w + 2) * f / (2 * wp1));
    w -= step;
    if (std::fabs(step) <= 4 * eps * (1 + std::fabs(w))) break;
  }
  const F residual = std::fabs(w * std::exp(w) - x);
  if (residual > F(1e-14) * std::max(F(1), std::fabs(x))) {
    throw DomainError("w_eval did not converge at x = " + std::to_string(static_cast<double>(x)));
  }
  return w;
}

using Real = long double;

Real to_real(const Rational& q) { return static_cast<Real>(q.get_d()); }

Real horner(const std::vector<Rational>& c, Real v) {
  Real acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + to_real(*it);
  return acc;
}

template <typename Fn>
Real central_difference(unsigned n, Real x, Real h, const Fn& f) {
  switch (n) {
    case 1:
      return (f(x + h) - f(x - h)) / (2 * h);
    case 2:
      return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
    case 3:
      return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
    case 4:
      return (f(x + 2 * h) - 4 * f(x + h) + 6 * f(x) - 4 * f(x - h) + f(x - 2 * h)) / (h * h * h * h);
    default:
      throw std::invalid_argument("finite differences are provided for 1 <= n <= 4");
  }
}

NumericCheck finish(unsigned n, const Rational& point, const Rational& step, Real formula, Real fd) {
  NumericCheck c;
  c.n = n;
  c.point = point;
  c.step = step;
  c.formula_value = static_cast<double>(formula);
  c.fd_value = static_cast<double>(fd);
  c.rel_err = static_cast<double>(std::fabs(formula - fd) / std::max(std::fabs(formula), Real(1)));
  return c;
}

void check_order(unsigned n) {
  if (n < 1 || n > 4) throw std::invalid_argument("derivative order must be in 1..4");
}

}  // namespace

double w_eval(double x0) { return lambert_w(x0); }
long double w_eval(long double x0) { return lambert_w(x0); }

Rational default_fd_step(unsigned n) {
  check_order(n);
  switch (n) {
    case 1:
    case 2:
      return Rational(1, 10000);
    case 3:
      return Rational(3, 10000);
    default:
      return Rational(5, 10000);
  }
}

NumericCheck derivative_formula_check(unsigned n, const Rational& x0, const std::optional<Rational>& h) {
  check_order(n);
  const Rational step = h.value_or(default_fd_step(n));
  if (sgn(step) <= 0) throw std::invalid_argument("step must be positive");
  const Real x = to_real(x0);
  const Real w = lambert_w(x);
  const auto p = p_poly(n).univariate_coefficients(Var::x);
  const Real formula = std::exp(-Real(n) * w) * horner(p, w) / std::pow(1 + w, Real(2 * n - 1));
  const Real fd = central_difference(n, x, to_real(step), [](Real v) { return lambert_w(v); });
  return finish(n, x0, step, formula, fd);
}

NumericCheck derivative_formula_check_R(unsigned n, const Rational& y0, const std::optional<Rational>& h) {
  check_order(n);
  const Rational step = h.value_or(default_fd_step(n));
  if (sgn(step) <= 0) throw std::invalid_argument("step must be positive");
  const Real inv_e = 1 / std::exp(Real(1));
  const Real y = to_real(y0);
  if (!(std::fabs(y) < inv_e)) throw DomainError("w e^{-w} = y needs |y| < 1/e");
  // w e^{-w} = y  <=>  (-w) e^{-w} = -y.
  auto solve = [](Real v) { return -lambert_w(-v); };
  const Real w = solve(y);
  const auto r = ramanujan_R(n).univariate_coefficients(Var::y);
  const Real formula = std::exp(Real(n) * w) / std::pow(1 - w, Real(n)) * horner(r, 1 / (1 - w));
  const Real fd = central_difference(n, y, to_real(step), solve);
  return finish(n, y0, step, formula, fd);
}

}  // namespace jstirling
