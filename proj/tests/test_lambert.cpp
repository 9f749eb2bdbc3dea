#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "jstirling/lambert.hpp"

using namespace jstirling;

namespace {

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

bool close(double a, double b, double rel) { return std::fabs(a - b) <= rel * std::fabs(b); }

double tolerance(unsigned n) { return n <= 2 ? 1e-6 : 1e-4; }

// d^n W/dx^n at x = 1/2 and x = 1, and w^{(n)} for w e^{-w} = y at y = 1/10 and 1/5,
// from an independent 30-digit evaluation.
const double kW[4][2] = {{0.52041864210687388757, 0.36189625663488922148},
                         {-0.47119718812574442580, -0.21454064628214370585},
                         {0.93040164556178062316, 0.27366852428160137257},
                         {-2.8659829167551502083, -0.54138844189939144826}};
const double kR[4][2] = {{1.2591382437197289657, 1.7491967609218358355},
                         {3.3704856769618727220, 7.1897783423817762522},
                         {20.575003935757142750, 68.856439335129844163},
                         {199.49826944615141716, 1055.4492977245253411}};

}  // namespace

TEST_CASE("derivative numerators p_n") {
  CHECK(p_poly(1) == MultiPoly(1));
  CHECK(p_poly(2) == P("-2 - x"));
  CHECK(p_poly(3) == P("9 + 8*x + 2*x^2"));
  CHECK(p_poly(4) == P("-64 - 79*x - 36*x^2 - 6*x^3"));
  CHECK(p_poly(5) == P("625 + 974*x + 622*x^2 + 192*x^3 + 24*x^4"));
  CHECK_THROWS_AS(p_poly(0), std::invalid_argument);
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(p_identity_check(n));
    CHECK(p_shape_check(n).certified());
    // p_n(0) = (-n)^{n-1}.
    Integer c;
    mpz_pow_ui(c.get_mpz_t(), Integer(n).get_mpz_t(), n - 1);
    if (n % 2 == 0) c = -c;
    CHECK(p_poly(n).constant_term() == Rational(c));
  }
}

TEST_CASE("truncated series arithmetic") {
  const TruncatedSeries y(Var::y, {0, 1}, 6);
  const auto e = y.exp();
  Rational f = 1;
  for (unsigned i = 0; i <= 6; ++i) {
    if (i > 0) f *= i;
    CHECK(e[i] == 1 / f);
  }
  // exp(a) exp(-a) = 1
  const TruncatedSeries a(Var::y, {0, 2, Rational(-1, 3), 5}, 6);
  CHECK(a.exp() * (-a).exp() == TruncatedSeries(Var::y, {1}, 6));
  CHECK((a + y) - y == a);
  CHECK((y * y)[2] == 1);
  CHECK((y * y * y * y * y * y * y)[6] == 0);
  CHECK_THROWS_AS(TruncatedSeries(Var::y, {1, 1}, 3).exp(), DomainError);
  CHECK_THROWS_AS(y + TruncatedSeries(Var::x, 6), std::invalid_argument);
  CHECK_THROWS_AS(y + TruncatedSeries(Var::y, 5), std::invalid_argument);
  CHECK(y.to_poly() == P("y"));
}

TEST_CASE("rooted-tree series") {
  const auto w = tree_series(6);
  CHECK(w.to_poly() == P("y + y^2 + 3/2*y^3 + 8/3*y^4 + 125/24*y^5 + 54/5*y^6"));
  for (unsigned n = 1; n <= 12; ++n) CHECK(tree_series_check(n));
  // The series solves w e^{-w} = y.
  const auto lhs = w * (-w).exp();
  CHECK(lhs == TruncatedSeries(Var::y, {0, 1}, 6));
}

TEST_CASE("principal branch evaluation") {
  CHECK(w_eval(0.0) == 0.0);
  CHECK(close(w_eval(1.0), 0.56714329040978387300, 1e-15));
  CHECK(std::fabs(static_cast<double>(w_eval(1.0L)) - 0.56714329040978387300) < 1e-16);
  CHECK(close(w_eval(std::exp(1.0)), 1.0, 1e-15));
  CHECK(close(w_eval(-std::exp(-1.0) + 1e-12), -1.0, 1e-5));
  CHECK(close(w_eval(1e6), 11.383358086140052622, 1e-14));
  for (double x : {-0.3, -0.1, 1e-9, 0.25, 3.0, 50.0}) {
    const double w = w_eval(x);
    CHECK(close(w * std::exp(w), x, 1e-14));
  }
  CHECK_THROWS_AS(w_eval(-0.5), DomainError);
}

TEST_CASE("derivative formula for W") {
  const Rational points[2] = {Rational(1, 2), Rational(1)};
  for (unsigned n = 1; n <= 4; ++n) {
    for (int i = 0; i < 2; ++i) {
      const auto c = derivative_formula_check(n, points[i]);
      CHECK(c.n == n);
      CHECK(close(c.formula_value, kW[n - 1][i], 1e-13));
      CHECK(c.rel_err < tolerance(n));
    }
  }
  const auto at0 = derivative_formula_check(3, 0);
  CHECK(close(at0.formula_value, 9.0, 1e-14));
  CHECK_THROWS_AS(derivative_formula_check(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(derivative_formula_check(1, 0, Rational(-1, 100)), std::invalid_argument);
}

TEST_CASE("derivative formula for the tree function") {
  const Rational points[2] = {Rational(1, 10), Rational(1, 5)};
  for (unsigned n = 1; n <= 4; ++n) {
    for (int i = 0; i < 2; ++i) {
      const auto c = derivative_formula_check_R(n, points[i]);
      CHECK(close(c.formula_value, kR[n - 1][i], 1e-13));
      CHECK(c.rel_err < tolerance(n));
    }
  }
  // w^{(n)}(0) = n^{n-1}.
  CHECK(close(derivative_formula_check_R(4, 0).formula_value, 64.0, 1e-14));
  CHECK_THROWS_AS(derivative_formula_check_R(1, Rational(2, 5)), DomainError);
}
