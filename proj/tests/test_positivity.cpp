#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "jstirling/positivity.hpp"
#include "jstirling/suites.hpp"

using namespace jstirling;

namespace {

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

PolySequence seq(std::initializer_list<const char*> list, SequenceKind kind = SequenceKind::FiniteZeroPadded) {
  PolySequence s;
  s.kind = kind;
  for (const char* t : list) s.items.push_back(P(t));
  return s;
}

// Coefficients in x of prod_i (a_i + b_i x); a_i, b_i have nonnegative coefficients in z.
PolySequence random_pf_sequence(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(0, 3), factors(1, 4);
  MultiPoly prod(1);
  const MultiPoly x = MultiPoly::var(Var::x), z = MultiPoly::var(Var::z);
  const int f = factors(rng);
  for (int i = 0; i < f; ++i) {
    const MultiPoly a = MultiPoly(1 + c(rng)) + MultiPoly(c(rng)) * z;
    const MultiPoly b = MultiPoly(1 + c(rng)) + MultiPoly(c(rng)) * z;
    prod *= a + b * x;
  }
  PolySequence s;
  s.items = prod.coefficients_in(Var::x);
  return s;
}

std::vector<Rational> random_values(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> c(0, 9);
  std::vector<Rational> v(len);
  for (auto& q : v) q = c(rng);
  v[0] = 1;
  return v;
}

}  // namespace

TEST_CASE("strong log-concavity examples") {
  const auto r = strong_log_concave_check(seq({"1", "z", "1"}));
  CHECK_FALSE(r.certified());
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->det == P("z^2 - 1"));
  CHECK(r.witness->rows == std::vector<std::size_t>{0, 1});
  CHECK(r.witness->cols == std::vector<std::size_t>{1, 2});

  const auto gap = strong_log_concave_check(seq({"1", "0", "1"}));
  REQUIRE(gap.witness.has_value());
  CHECK(gap.witness->rows == std::vector<std::size_t>{0, 1});
  CHECK(gap.witness->cols == std::vector<std::size_t>{1, 2});
  CHECK(gap.witness->det == MultiPoly(-1));

  CHECK(strong_log_concave_check(seq({"1", "2", "1"})).certified());
  CHECK(strong_log_concave_check(seq({"1", "1 + z", "1 + z + z^2"})).certified());
  CHECK(strong_log_concave_check(seq({"1", "2 + z", "1 + z"})).certified());
}

TEST_CASE("strong log-convexity examples") {
  CHECK(strong_log_convex_check(seq({"1", "1", "1", "1"})).certified());
  CHECK(strong_log_convex_check(seq({"1", "1 + z", "2 + 4*z + 2*z^2", "5 + 15*z + 15*z^2 + 5*z^3"})).certified());
  const auto r = strong_log_convex_check(seq({"1", "2", "1"}));
  CHECK_FALSE(r.certified());
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->det == MultiPoly(-3));
}

TEST_CASE("matrix total positivity") {
  PolyMatrix m(2, 2, MultiPoly(1));
  m(1, 0) = P("z");
  const auto r = matrix_tp_check(m, 2);
  CHECK_FALSE(r.certified());
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->det == P("1 - z"));
  CHECK(matrix_tp_check(m, 1).certified());
  m(1, 0) = 1;
  m(1, 1) = P("1 + z");
  CHECK(matrix_tp_check(m, 2).certified());
  CHECK(matrix_tp_check(triangle_matrix(TriangleKind::SecondKind, 6), 3).certified());
}

TEST_CASE("Polya frequency checks") {
  const auto ones = toeplitz_pf_check(seq({"1", "1", "1"}), 3, 1);
  CHECK_FALSE(ones.certified());
  REQUIRE(ones.witness.has_value());
  CHECK(ones.witness->rows == std::vector<std::size_t>{0, 1, 2});
  CHECK(ones.witness->cols == std::vector<std::size_t>{1, 2, 3});
  CHECK(ones.witness->det == MultiPoly(-1));
  CHECK(toeplitz_pf_check(seq({"1", "1", "1"}), 2, 1).certified());
  // A truncated all-ones sequence is the PF sequence 1/(1-x).
  CHECK(toeplitz_pf_check(seq({"1", "1", "1", "1", "1", "1"}, SequenceKind::TruncatedInfinite), 4, 1).certified());
  CHECK(toeplitz_pf_check(seq({"1", "2 + z", "1 + z"}), 3, 1).certified());
  // The diagonal {JS(1+n,n;1/2)} has a numerator with real nonpositive roots.
  const std::vector<Rational> d{0, Rational(3, 2), Rational(13, 2), 17, 35, Rational(125, 2)};
  CHECK(diagonal_values(1, Rational(1, 2), 5) == d);
  CHECK(numeric_pf_check(diagonal_values(1, Rational(1, 2), 12), SequenceKind::TruncatedInfinite, 4, 1).certified());
}

TEST_CASE("PF certification implies strong log-concavity") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const PolySequence s = random_pf_sequence(rng);
    const auto pf = toeplitz_pf_check(s, 3, 1);
    CHECK(pf.certified());
    if (pf.certified()) CHECK(strong_log_concave_check(s).certified());
  }
  for (int trial = 0; trial < 60; ++trial) {
    const auto v = random_values(rng, 5);
    if (numeric_pf_check(v, SequenceKind::FiniteZeroPadded, 2, 1).certified()) {
      PolySequence s;
      for (const auto& q : v) s.items.emplace_back(q);
      // Every strong log-concavity determinant is an order-2 Toeplitz minor.
      CHECK(strong_log_concave_check(s).certified());
    }
  }
}

TEST_CASE("verdicts are invariant under reversal of a finite sequence") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto v = random_values(rng, 5);
    v.back() = 1 + trial % 3;
    auto rv = v;
    std::reverse(rv.begin(), rv.end());
    CHECK(numeric_pf_check(v, SequenceKind::FiniteZeroPadded, 3, 1).certified() ==
          numeric_pf_check(rv, SequenceKind::FiniteZeroPadded, 3, 1).certified());
  }
}

TEST_CASE("witness does not depend on the thread count") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    const auto v = random_values(rng, 9);
    const auto one = numeric_pf_check(v, SequenceKind::TruncatedInfinite, 4, 1);
    for (unsigned threads : {2u, 3u, 8u}) {
      const auto many = numeric_pf_check(v, SequenceKind::TruncatedInfinite, 4, threads);
      CHECK(one.verdict == many.verdict);
      if (one.witness && many.witness) {
        CHECK(one.witness->rows == many.witness->rows);
        CHECK(one.witness->cols == many.witness->cols);
        CHECK(one.witness->det == many.witness->det);
      }
    }
  }
}

TEST_CASE("triangle lemma") {
  // The second-kind triangle: a = k(k+z), b = 1.
  const auto js = lemma_triangle_check([](unsigned, unsigned k) { return MultiPoly(static_cast<long>(k)) * P("z") + MultiPoly(static_cast<long>(k * k)); },
                                       [](unsigned, unsigned) { return MultiPoly(1); }, MultiPoly(1), 8);
  CHECK(js.overall.certified());
  CHECK(js.failed == TriangleHypothesis::None);
  CHECK(js.triangle[6][2] == js_second(6, 2));

  const auto pascal = lemma_triangle_check([](unsigned, unsigned) { return MultiPoly(1); },
                                           [](unsigned, unsigned) { return MultiPoly(1); }, MultiPoly(1), 6);
  CHECK(pascal.overall.certified());
  CHECK(pascal.triangle[6][3] == MultiPoly(20));

  const auto bad = lemma_triangle_check([](unsigned, unsigned k) { return MultiPoly(3 - static_cast<long>(k)); },
                                        [](unsigned, unsigned) { return MultiPoly(1); }, MultiPoly(1), 4);
  CHECK_FALSE(bad.overall.certified());
  CHECK(bad.failed == TriangleHypothesis::Monotonicity);
  CHECK_THROWS_AS(lemma_triangle_check([](unsigned, unsigned) { return MultiPoly(1); },
                                       [](unsigned, unsigned) { return MultiPoly(1); }, MultiPoly(1), 1, 2),
                  std::invalid_argument);
}

TEST_CASE("transform log-convexity probe") {
  std::vector<Rational> factorials{1};
  for (int i = 1; i <= 8; ++i) factorials.push_back(factorials.back() * i);
  CHECK(transform_logconvexity_probe(1, TriangleKind::SecondKind, 8, std::vector<Rational>(9, 1)).certified());
  CHECK(transform_logconvexity_probe(0, TriangleKind::FirstKind, 8, factorials).certified());
  CHECK(transform_logconvexity_probe(1, TriangleKind::SecondKind, 1, {1, 1}).certified());
  CHECK(transform_logconvexity_probe(1, TriangleKind::SecondKind, 7, factorials).certified());
  CHECK(transform_logconvexity_probe(0, TriangleKind::FirstKind, 7, std::vector<Rational>(8, 1)).certified());
  CHECK_THROWS_AS(transform_logconvexity_probe(2, TriangleKind::SecondKind, 3, factorials), std::invalid_argument);
  CHECK_THROWS_AS(transform_logconvexity_probe(0, TriangleKind::SecondKind, 3, {1, 2, 1, 2}), std::invalid_argument);
}
