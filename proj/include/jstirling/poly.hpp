#pragma once

// Exact sparse multivariate polynomials over the rationals.
//
// Variables come from a small fixed registry ordered by name
// (n < t < x < y < z). Terms are kept in a graded order: total degree
// ascending, and within one degree the monomial with the larger exponent
// on the earlier registry variable comes first. That order is a proper
// monomial order (compatible with multiplication, 1 is minimal), so the
// last stored term is the leading term used by exact division.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jstirling {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Var : std::uint8_t { n = 0, t = 1, x = 2, y = 3, z = 4 };

inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::n, Var::t, Var::x, Var::y,
                                                       Var::z};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent vector over the variable registry.
class Monomial {
 public:
  Monomial() = default;

  static Monomial of(Var v, unsigned e = 1);

  unsigned exponent(Var v) const { return exp_[static_cast<std::size_t>(v)]; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }

  Monomial with(Var v, unsigned e) const;
  Monomial operator*(const Monomial& other) const;

  /// Quotient when `divisor` divides this monomial.
  std::optional<Monomial> divide(const Monomial& divisor) const;

  const std::array<std::uint16_t, kNumVars>& exponents() const { return exp_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kNumVars> exp_{};
};

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static MultiPoly var(Var v);
  static MultiPoly term(const Rational& c, const Monomial& m);

  /// Builds sum c_i v^i from an ascending coefficient list.
  static MultiPoly from_coefficients(Var v, const std::vector<Rational>& coeffs);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }

  unsigned total_degree() const;
  unsigned degree(Var v) const;
  bool depends_on(Var v) const { return degree(v) > 0; }

  /// Leading term under MonomialOrder. Precondition: nonzero.
  const std::pair<const Monomial, Rational>& leading() const;

  /// Coefficient of v^e, as a polynomial in the remaining variables.
  MultiPoly coefficient_of(Var v, unsigned e) const;

  /// Ascending list of coefficients of v^0, v^1, ..., v^deg.
  std::vector<MultiPoly> coefficients_in(Var v) const;

  /// Ascending rational coefficients; throws if another variable occurs.
  std::vector<Rational> univariate_coefficients(Var v) const;

  /// True when every coefficient has denominator 1.
  bool is_integral() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(MultiPoly a);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text form, e.g. "341 + 738*z + 604*z^2".
  std::string to_string() const;
  static MultiPoly parse(std::string_view text);

 private:
  void add_term(const Monomial& m, const Rational& c);
  void add_canonical(const Monomial& m, const Rational& c);

  Terms terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned e);
MultiPoly derivative(const MultiPoly& p, Var v);
MultiPoly substitute(const MultiPoly& p, Var v, const MultiPoly& s);
MultiPoly evaluate(const MultiPoly& p, Var v, const Rational& value);

/// Coefficientwise order: every coefficient is >= 0 (the zero polynomial passes).
bool is_nonneg(const MultiPoly& p);

/// Quotient a / b when b divides a exactly in Q[vars]; nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Like divide_exact but throws std::domain_error on a nonzero remainder.
MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b);

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace jstirling
