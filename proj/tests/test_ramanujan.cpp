#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jstirling/positivity.hpp"
#include "jstirling/ramanujan.hpp"

using namespace jstirling;

namespace {

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

MultiPoly at(const MultiPoly& p, const Rational& x, const Rational& y, const Rational& z, const Rational& t) {
  return evaluate(evaluate(evaluate(evaluate(p, Var::x, x), Var::y, y), Var::z, z), Var::t, t);
}

}  // namespace

TEST_CASE("Ramanujan polynomials") {
  CHECK(ramanujan_R(1) == MultiPoly(1));
  CHECK(ramanujan_R(2) == P("1 + y"));
  CHECK(ramanujan_R(3) == P("2 + 4*y + 3*y^2"));
  CHECK(ramanujan_R(4) == P("6 + 18*y + 25*y^2 + 15*y^3"));
  CHECK(ramanujan_R(5) == P("24 + 96*y + 190*y^2 + 210*y^3 + 105*y^4"));
  CHECK(ramanujan_R(6) == P("120 + 600*y + 1526*y^2 + 2380*y^3 + 2205*y^4 + 945*y^5"));
  // R_n(0) = (n-1)! and the leading coefficient is (2n-3)!!.
  for (unsigned n = 2; n <= 9; ++n) {
    const auto c = ramanujan_R(n).univariate_coefficients(Var::y);
    Integer f = 1, dbl = 1;
    for (unsigned i = 1; i < n; ++i) f *= i;
    for (unsigned i = 1; i <= 2 * n - 3; i += 2) dbl *= i;
    CHECK(c.front() == Rational(f));
    CHECK(c.back() == Rational(dbl));
  }
}

TEST_CASE("generalized Ramanujan polynomials") {
  CHECK(chapoton_Q(1) == MultiPoly(1));
  CHECK(chapoton_Q(2) == P("x + y + z + t"));
  CHECK(chapoton_Q(3) == P("x^2 + 3*x*y + 3*x*z + 3*x*t + 3*y^2 + 4*y*z + 5*y*t + 2*z^2 + 4*z*t + 2*t^2"));
  CHECK(at(chapoton_Q(4), 1, 1, 1, 1) == MultiPoly(336));
  CHECK(chapoton_Q(4).size() == 20);
  CHECK(at(chapoton_Q(5), 1, 2, 3, 4) == MultiPoly(258580));
  for (unsigned n = 1; n <= 7; ++n) {
    CHECK(homogeneity_check(n));
    CHECK(at(chapoton_Q(n), 0, 0, 0, 0).is_zero() == (n > 1));
    CHECK(evaluate(evaluate(evaluate(chapoton_Q(n), Var::x, 0), Var::z, 1), Var::t, 0) == ramanujan_R(n));
  }
  // Only the x^{n-1} term survives at y = z = t = 0.
  for (unsigned n = 1; n <= 6; ++n) CHECK(at(chapoton_Q(n), 1, 0, 0, 0) == MultiPoly(1));
}

TEST_CASE("y-coefficients Q_{n,k}") {
  CHECK(q_nk(4, 0) == P("x^3 + 6*x^2 + 11*x + 6 + 6*t^3 + 11*t^2*x + 18*t^2 + 6*t*x^2 + 22*t*x + 18*t"));
  CHECK(q_nk(4, 1) == P("26*t^2 + 26*t*x + 43*t + 6*x^2 + 22*x + 18"));
  CHECK(q_nk(4, 2) == P("35*t + 15*x + 25"));
  CHECK(q_nk(4, 3) == MultiPoly(15));
  CHECK(q_nk(4, 4).is_zero());
  CHECK(q_nk(4, -1).is_zero());
  const MultiPoly y = MultiPoly::var(Var::y);
  for (unsigned n = 1; n <= 7; ++n) {
    MultiPoly s;
    for (unsigned k = 0; k < n; ++k) s += q_nk(n, static_cast<long>(k)) * pow(y, k);
    CHECK(s == evaluate(chapoton_Q(n), Var::z, 1));
  }
}

TEST_CASE("family cache agrees with the free functions") {
  const QFamily fam(7);
  CHECK(fam.n_max() == 7);
  for (unsigned n = 1; n <= 7; ++n) {
    CHECK(fam.Q(n) == chapoton_Q(n));
    REQUIRE(fam.Qnk_row(n).size() == n);
    for (long k = -1; k <= static_cast<long>(n); ++k) CHECK(fam.Qnk(n, k) == q_nk(n, k));
  }
  CHECK_THROWS(fam.Q(8));
  CHECK_THROWS(fam.Q(0));
  CHECK(u_product(4, 1, 2) == q_nk(4, 1) * q_nk(4, 2));
}

TEST_CASE("log-convexity defects") {
  CHECK(q_logconvex_defect(2, 2) == P("t^2 + t*x + 3*t*y + 2*t*z + x*y + x*z + 2*y^2 + 2*y*z + z^2"));
  const QFamily fam(7);
  for (unsigned m = 2; m <= 6; ++m) {
    for (unsigned n = m; n <= 6; ++n) {
      const MultiPoly d = fam.defect(m, n);
      CHECK(d == chapoton_Q(m - 1) * chapoton_Q(n + 1) - chapoton_Q(m) * chapoton_Q(n));
      CHECK(is_nonneg(d));
      CHECK(d.is_integral());
    }
  }
  CHECK_THROWS(fam.defect(3, 2));
  PolySequence s;
  for (unsigned n = 1; n <= 7; ++n) s.items.push_back(fam.Q(n));
  CHECK(strong_log_convex_check(s).certified());
}

TEST_CASE("rows of Q_{n,k} are strongly log-concave") {
  const QFamily fam(7);
  for (unsigned n = 1; n <= 7; ++n) {
    CHECK(strong_log_concave_check({fam.Qnk_row(n), SequenceKind::FiniteZeroPadded}).certified());
  }
}
