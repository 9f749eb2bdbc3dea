#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jstirling/diagonal_gf.hpp"

using namespace jstirling;

namespace {

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

std::vector<MultiPoly> Ps(std::initializer_list<const char*> list) {
  std::vector<MultiPoly> out;
  for (const char* s : list) out.push_back(P(s));
  return out;
}

}  // namespace

TEST_CASE("numerators A_1..A_3") {
  CHECK(numerator_A(1).coeffs == Ps({"0", "z + 1", "1 - z"}));
  CHECK(numerator_A(2).coeffs ==
        Ps({"0", "(z+1)^2", "2*(5*z+7)", "-3*(z^2+2*z-7)", "2*(z-2)*(z-1)"}));
  CHECK(numerator_A(3).coeffs == Ps({"0", "(z+1)^3", "5*z^3+49*z^2+111*z+75", "-3*(5*z^3-3*z^2-129*z-201)",
                                     "5*z^3-141*z^2-65*z+1065", "2*(5*z^3+22*z^2-185*z+230)",
                                     "-6*(z-3)*(z-2)*(z-1)"}));
  CHECK(numerator_A(1).poly() == P("(z+1)*x + (1-z)*x^2"));
}

TEST_CASE("recurrence and series routes agree") {
  for (unsigned k = 0; k <= 6; ++k) CHECK(numerator_A_recurrence(k) == numerator_A_series(k));
}

TEST_CASE("A_k expands back to the diagonal") {
  for (unsigned k = 1; k <= 4; ++k) {
    const auto a = numerator_A(k).coeffs;
    const auto f = diagonal_poly(k).poly;
    // f_k(n) = sum_i a_i binom(n - i + 3k, 3k)
    for (long n = 0; n <= 8; ++n) {
      MultiPoly s;
      for (long i = 0; i < static_cast<long>(a.size()) && i <= n; ++i) {
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n - i + 3 * k), 3 * k);
        s += a[static_cast<std::size_t>(i)] * MultiPoly(b);
      }
      CHECK(s == evaluate(f, Var::n, n));
    }
  }
}

TEST_CASE("diagonal closed forms") {
  CHECK(diagonal_poly(0).poly == MultiPoly(1));
  CHECK(diagonal_poly(1).poly == P("1/6*n*(n+1)*(2*n+3*z+1)"));
  CHECK(diagonal_poly(2).poly ==
        P("1/360*n*(n+1)*(n+2)*(20*n^3+60*n^2*z+36*n^2+45*n*z^2+60*n*z+7*n+15*z^2-3)"));
  for (unsigned k = 1; k <= 4; ++k) {
    const auto f = diagonal_poly(k).poly;
    for (unsigned n = 0; n <= 6; ++n) CHECK(evaluate(f, Var::n, n) == js_second(k + n, n));
  }
  CHECK(indefinite_sum(P("n"), Var::n) == P("1/2*n*(n+1)"));
  CHECK(indefinite_sum(P("n^2*z"), Var::n) == P("1/6*z*n*(n+1)*(2*n+1)"));
}

TEST_CASE("companion polynomials") {
  CHECK(companion_B(1) == P("(z^2+2*z+1)*x + (-2*z^2+z+5)*x^2 + (z^2-3*z+2)*x^3"));
  for (unsigned k = 1; k <= 3; ++k) {
    for (long z0 = 0; z0 <= 3; ++z0) CHECK(evaluate(companion_B(k), Var::z, z0) == companion_B_reference(k, z0));
  }
  for (unsigned k = 1; k <= 5; ++k) CHECK(A_from_B_check(k));
}

TEST_CASE("first-kind diagonals") {
  const auto d = first_kind_diagonal(1, 5);
  REQUIRE(d.size() == 5);
  CHECK(d[0].is_zero());
  CHECK(d[1] == P("1 + z"));
  CHECK(d[2] == P("5 + 3*z"));
  CHECK(d[4] == js_first(5, 4));
  const auto d2 = first_kind_diagonal(2, 6);
  CHECK(d2[3] == js_first(5, 3));
}

TEST_CASE("root analysis") {
  const auto r0 = root_analysis(1, 0);
  CHECK(r0.all_real_nonpositive());
  CHECK(r0.rational_roots == std::vector<Rational>{-1, 0});
  for (unsigned k = 1; k <= 3; ++k) {
    for (const Rational z0 : {Rational(-1, 2), Rational(0), Rational(1, 2)}) {
      const auto r = root_analysis(k, z0);
      CHECK(r.degree == static_cast<int>(2 * k));
      CHECK(r.all_real_nonpositive());
      CHECK(r.distinct);
    }
  }
  // The leading coefficient 2(z-2)(z-1) drops the degree at z = 2.
  const auto r2 = root_analysis(2, 2);
  CHECK(r2.degree == 3);
  // A_1(x; 2) = 3x - x^2 has the positive root 3.
  const auto r12 = root_analysis(1, 2);
  CHECK(r12.has_positive_real_root);
  CHECK(r12.rational_roots == std::vector<Rational>{0, 3});
}
