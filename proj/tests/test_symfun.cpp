#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "jstirling/symfun.hpp"

using namespace jstirling;

namespace {

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

std::vector<MultiPoly> xyz() { return {MultiPoly::var(Var::x), MultiPoly::var(Var::y), MultiPoly::var(Var::z)}; }

}  // namespace

TEST_CASE("small cases") {
  const auto a = xyz();
  CHECK(elementary(0, a) == MultiPoly(1));
  CHECK(elementary(2, a) == P("x*y + x*z + y*z"));
  CHECK(elementary(3, a) == P("x*y*z"));
  CHECK(elementary(4, a).is_zero());
  CHECK(homogeneous(2, a) == P("x^2 + y^2 + z^2 + x*y + x*z + y*z"));
  CHECK(homogeneous(3, {MultiPoly::var(Var::x)}) == P("x^3"));
  CHECK(homogeneous(1, {}).is_zero());
  CHECK(homogeneous(0, {}) == MultiPoly(1));
}

TEST_CASE("generating function identity sum (-1)^i e_i h_{k-i} = [k = 0]") {
  const auto args = jacobi_weights(5);
  const auto e = symmetric_row(SymKind::Elementary, 8, args);
  const auto h = symmetric_row(SymKind::Homogeneous, 8, args);
  for (unsigned k = 0; k <= 8; ++k) {
    MultiPoly s;
    for (unsigned i = 0; i <= k; ++i) {
      MultiPoly term = e[i] * h[k - i];
      if (i % 2 == 1) term = -term;
      s += term;
    }
    CHECK(s == MultiPoly(k == 0 ? 1 : 0));
  }
}

TEST_CASE("symmetry under permutation of the arguments") {
  auto args = jacobi_weights(4);
  const auto e = symmetric_row(SymKind::Elementary, 4, args);
  const auto h = symmetric_row(SymKind::Homogeneous, 4, args);
  std::reverse(args.begin(), args.end());
  std::swap(args[0], args[2]);
  CHECK(symmetric_row(SymKind::Elementary, 4, args) == e);
  CHECK(symmetric_row(SymKind::Homogeneous, 4, args) == h);
}

TEST_CASE("table rows agree with direct evaluation") {
  const auto args = jacobi_weights(4, -1);
  const auto t = symmetric_table(SymKind::Homogeneous, 3, args);
  REQUIRE(t.size() == args.size() + 1);
  for (std::size_t m = 0; m <= args.size(); ++m) {
    const std::vector<MultiPoly> prefix(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(m));
    for (unsigned k = 0; k <= 3; ++k) CHECK(t[m][k] == homogeneous(k, prefix));
  }
}

TEST_CASE("jacobi weights") {
  const auto w = jacobi_weights(3);
  CHECK(w[0] == P("1 + z"));
  CHECK(w[2] == P("9 + 3*z"));
  CHECK(jacobi_weights(2, -1)[1] == P("2 + 2*z"));
  // h_1(1(1+z), 2(2+z)) = 5 + 3z, the entry (3,2) of the second-kind triangle.
  CHECK(homogeneous(1, jacobi_weights(2)) == P("5 + 3*z"));
  CHECK(elementary(2, jacobi_weights(2)) == P("2*z^2 + 6*z + 4"));
}
