#include "jstirling/diagonal_gf.hpp"

#include <string>

namespace jstirling {

namespace {

MultiPoly var_poly(Var v) { return MultiPoly::var(v); }

// (v + 1)(v)(v - 1)...(v + 1 - (len-1)): falling factorial of v+1 of length len.
MultiPoly shifted_falling(Var v, unsigned len) {
  MultiPoly acc(1);
  for (unsigned i = 0; i < len; ++i) acc *= var_poly(v) + MultiPoly(1 - static_cast<long>(i));
  return acc;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

MultiPoly NumeratorA::poly() const {
  MultiPoly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out += coeffs[i] * MultiPoly::term(1, Monomial::of(Var::x, static_cast<unsigned>(i)));
  }
  return out;
}

MultiPoly indefinite_sum(const MultiPoly& g, Var n) {
  // n^d = sum_j S(d,j) (n)_j and sum_{m=1}^{N} (m)_j = (N+1)_{j+1}/(j+1) - [j = 0].
  const auto parts = g.coefficients_in(n);
  MultiPoly out;
  for (unsigned d = 0; d < parts.size(); ++d) {
    if (parts[d].is_zero()) continue;
    const auto s = stirling2_row(d);
    MultiPoly sum_of_power;
    for (unsigned j = 0; j <= d; ++j) {
      if (s[j] == 0) continue;
      MultiPoly term = shifted_falling(n, j + 1);
      term *= Rational(s[j], j + 1);
      if (j == 0) term -= MultiPoly(s[j]);
      sum_of_power += term;
    }
    out += parts[d] * sum_of_power;
  }
  return out;
}

DiagonalPoly diagonal_poly(unsigned k) {
  MultiPoly f(1);
  const MultiPoly step = var_poly(Var::n) * (var_poly(Var::n) + var_poly(Var::z));
  for (unsigned i = 1; i <= k; ++i) f = indefinite_sum(step * f, Var::n);
  return {k, f};
}

std::vector<MultiPoly> numerator_A_recurrence(unsigned k) {
  const MultiPoly z = var_poly(Var::z);
  std::vector<MultiPoly> prev{MultiPoly(1)};
  for (unsigned kk = 1; kk <= k; ++kk) {
    const long K = 3 * static_cast<long>(kk);
    std::vector<MultiPoly> next(2 * kk + 1);
    auto prev_at = [&](long i) -> MultiPoly {
      return (i < 0 || i >= static_cast<long>(prev.size())) ? MultiPoly{} : prev[static_cast<std::size_t>(i)];
    };
    for (long i = 0; i <= 2 * static_cast<long>(kk); ++i) {
      MultiPoly v = MultiPoly(i) * (MultiPoly(i) + z) * prev_at(i);
      v += (MultiPoly(2 * i * (K - i - 1)) - (MultiPoly(1) - z) * MultiPoly(K - 2 * i)) * prev_at(i - 1);
      v += MultiPoly(K - i) * (MultiPoly(K - i) - z) * prev_at(i - 2);
      next[static_cast<std::size_t>(i)] = std::move(v);
    }
    prev = std::move(next);
  }
  return prev;
}

std::vector<MultiPoly> numerator_A_series(unsigned k) {
  const TriangleTable js(TriangleKind::SecondKind, 3 * k);
  const unsigned width = 3 * k + 1;
  std::vector<MultiPoly> out(2 * k + 1);
  for (unsigned i = 0; i <= 2 * k; ++i) {
    MultiPoly acc;
    for (unsigned n = 0; n <= i; ++n) {
      const unsigned j = i - n;
      if (j > width) continue;
      Integer b = binomial(width, j);
      if (j % 2 == 1) b = -b;
      MultiPoly term = js.at(k + n, n);
      term *= Rational(b);
      acc += term;
    }
    out[i] = std::move(acc);
  }
  return out;
}

NumeratorA numerator_A(unsigned k) {
  auto rec = numerator_A_recurrence(k);
  const auto ser = numerator_A_series(k);
  if (rec != ser) {
    throw ConsistencyError("numerator A_" + std::to_string(k) +
                           ": recurrence and series routes disagree");
  }
  return {k, std::move(rec)};
}

MultiPoly companion_B(unsigned k) {
  const MultiPoly a = numerator_A(k).poly();
  const MultiPoly x = var_poly(Var::x);
  const MultiPoly z = var_poly(Var::z);
  const MultiPoly one_minus_x = MultiPoly(1) - x;
  return z * one_minus_x * a +
         x * (MultiPoly(3 * static_cast<long>(k) + 1) * a + one_minus_x * derivative(a, Var::x));
}

MultiPoly companion_B_reference(unsigned k, long z0) {
  if (z0 < 0) throw std::invalid_argument("companion_B_reference needs z0 >= 0");
  const MultiPoly x = var_poly(Var::x);
  const MultiPoly a = evaluate(numerator_A(k).poly(), Var::z, Rational(z0));
  const MultiPoly p = pow(x, static_cast<unsigned>(z0)) * a;
  const MultiPoly q = pow(MultiPoly(1) - x, 3 * k + 1);
  // D(p/q) = (p'q - pq')/q^2; multiply by (1-x)^{3k+2} x^{1-z0}.
  const MultiPoly num = (derivative(p, Var::x) * q - p * derivative(q, Var::x)) * x;
  const MultiPoly den = pow(MultiPoly(1) - x, 3 * k) * pow(x, static_cast<unsigned>(z0));
  return exact_quotient(num, den);
}

bool A_from_B_check(unsigned k) {
  if (k == 0) throw std::invalid_argument("A_from_B_check requires k >= 1");
  const MultiPoly b = companion_B(k - 1);
  const MultiPoly x = var_poly(Var::x);
  const MultiPoly rhs =
      x * (MultiPoly(3 * static_cast<long>(k) - 1) * b + (MultiPoly(1) - x) * derivative(b, Var::x));
  return rhs == numerator_A(k).poly();
}

std::vector<MultiPoly> first_kind_diagonal(unsigned k, unsigned big_n) {
  if (big_n < k) throw std::invalid_argument("first_kind_diagonal requires N >= k");
  const TriangleTable js(TriangleKind::FirstKind, big_n);
  const MultiPoly f = substitute(diagonal_poly(k).poly, Var::z, -var_poly(Var::z));
  std::vector<MultiPoly> out;
  for (unsigned n = k; n <= big_n; ++n) {
    const MultiPoly& g = js.at(n, n - k);
    MultiPoly dual = evaluate(f, Var::n, Rational(-static_cast<long>(n)));
    if (k % 2 == 1) dual = -dual;
    if (dual != g) {
      throw ConsistencyError("first-kind diagonal " + std::to_string(k) + " at n=" + std::to_string(n) +
                             ": " + g.to_string() + " vs dual " + dual.to_string());
    }
    out.push_back(g);
  }
  return out;
}

RootReport root_analysis(unsigned k, const Rational& z0) {
  if (k == 0) throw std::invalid_argument("root_analysis requires k >= 1");
  const MultiPoly a = evaluate(numerator_A(k).poly(), Var::z, z0);
  return analyze_roots(UPoly::from_multi(a, Var::x));
}

}  // namespace jstirling
