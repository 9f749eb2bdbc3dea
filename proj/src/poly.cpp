#include "jstirling/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace jstirling {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"n", "t", "x", "y", "z"};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

}  // namespace

std::string_view var_name(Var v) { return kVarNames[idx(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (Var v : kAllVars) {
    if (kVarNames[idx(v)] == name) return v;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, unsigned e) { return Monomial{}.with(v, e); }

unsigned Monomial::degree() const {
  return std::accumulate(exp_.begin(), exp_.end(), 0u);
}

Monomial Monomial::with(Var v, unsigned e) const {
  Monomial m = *this;
  m.exp_[idx(v)] = static_cast<std::uint16_t>(e);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    m.exp_[i] = static_cast<std::uint16_t>(exp_[i] + other.exp_[i]);
  }
  return m;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp_[i] < divisor.exp_[i]) return std::nullopt;
    m.exp_[i] = static_cast<std::uint16_t>(exp_[i] - divisor.exp_[i]);
  }
  return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  // Same degree: the larger exponent on an earlier variable sorts first.
  return a.exponents() > b.exponents();
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly::MultiPoly(const Integer& c) : MultiPoly(Rational(c)) {}

MultiPoly::MultiPoly(const Rational& c) { add_term(Monomial{}, c); }

MultiPoly MultiPoly::var(Var v) { return term(1, Monomial::of(v)); }

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::from_coefficients(Var v, const std::vector<Rational>& coeffs) {
  MultiPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    p.add_term(Monomial::of(v, static_cast<unsigned>(i)), coeffs[i]);
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

const std::pair<const Monomial, Rational>& MultiPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return *terms_.rbegin();
}

MultiPoly MultiPoly::coefficient_of(Var v, unsigned e) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) == e) out.terms_.emplace(m.with(v, 0), c);
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  std::vector<MultiPoly> out(degree(v) + 1);
  for (const auto& [m, c] : terms_) out[m.exponent(v)].add_term(m.with(v, 0), c);
  return out;
}

std::vector<Rational> MultiPoly::univariate_coefficients(Var v) const {
  std::vector<Rational> out(degree(v) + 1);
  for (const auto& [m, c] : terms_) {
    if (m.degree() != m.exponent(v)) {
      throw std::domain_error("polynomial is not univariate in " + std::string(var_name(v)) +
                              ": " + to_string());
    }
    out[m.exponent(v)] = c;
  }
  return out;
}

bool MultiPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (c.get_den() != 1) {
    // mpq_class(p, q) does not reduce; GMP arithmetic needs canonical operands.
    Rational r = c;
    r.canonicalize();
    add_canonical(m, r);
    return;
  }
  add_canonical(m, c);
}

void MultiPoly::add_canonical(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    Rational r = c;
    r.canonicalize();
    for (auto& [m, coeff] : terms_) coeff *= r;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(ma * mb, prod);
    }
  }
  return out;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_str();
  Rational r = q;
  r.canonicalize();
  return r.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  auto valid_int = [](std::string_view d) {
    if (!d.empty() && (d.front() == '-' || d.front() == '+')) d.remove_prefix(1);
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed rational literal '" + s + "'");
  }
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational q{Integer(num), d};
  q.canonicalize();
  return q;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rational_to_string(c);
    for (Var v : kAllVars) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      os << '*' << var_name(v);
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

namespace {

// Recursive-descent parser for sums of products of rational literals and
// powers of registry variables. Accepts the canonical form and the usual
// hand-written variants ("z + 1", "3*x^2 - y").
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  MultiPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial text");
    MultiPoly out;
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = get() == '-';
      skip_ws();
    }
    MultiPoly t = parse_term();
    out += negate ? -t : t;
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      skip_ws();
      // "+ -c*x" is the canonical rendering of a negative coefficient.
      bool neg = op == '-';
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        if (get() == '-') neg = !neg;
        skip_ws();
      }
      t = parse_term();
      out += neg ? -t : t;
    }
    return out;
  }

 private:
  MultiPoly parse_term() {
    MultiPoly acc(1);
    acc *= parse_factor();
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      get();
      skip_ws();
      acc *= parse_factor();
    }
    return acc;
  }

  MultiPoly parse_factor() {
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (!at_end() && peek() == '/') {
        ++pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      return MultiPoly(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
      auto name = s_.substr(start, pos_ - start);
      auto v = var_from_name(name);
      if (!v) fail("unknown variable '" + std::string(name) + "'");
      unsigned e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        get();
        skip_ws();
        std::size_t ds = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (ds == pos_) fail("expected exponent");
        e = static_cast<unsigned>(std::stoul(std::string(s_.substr(ds, pos_ - ds))));
      }
      return MultiPoly::term(1, Monomial::of(*v, e));
    }
    if (peek() == '(') {
      get();
      std::size_t depth = 1;
      std::size_t start = pos_;
      while (!at_end() && depth > 0) {
        const char ch = get();
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
      }
      if (depth != 0) fail("unbalanced parenthesis");
      MultiPoly inner = PolyParser(s_.substr(start, pos_ - start - 1)).parse();
      skip_ws();
      if (!at_end() && peek() == '^') {
        get();
        skip_ws();
        std::size_t ds = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (ds == pos_) fail("expected exponent");
        inner = pow(inner, static_cast<unsigned>(std::stoul(std::string(s_.substr(ds, pos_ - ds)))));
      }
      return inner;
    }
    fail(std::string("unexpected character '") + peek() + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// Free functions

MultiPoly pow(const MultiPoly& base, unsigned e) {
  MultiPoly result(1);
  MultiPoly b = base;
  while (e > 0) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e > 0) b = b * b;
  }
  return result;
}

MultiPoly derivative(const MultiPoly& p, Var v) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    out += MultiPoly::term(c * e, m.with(v, e - 1));
  }
  return out;
}

MultiPoly substitute(const MultiPoly& p, Var v, const MultiPoly& s) {
  const auto parts = p.coefficients_in(v);
  // Horner in s over the coefficient polynomials.
  MultiPoly acc;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    acc = acc * s + *it;
  }
  return acc;
}

MultiPoly evaluate(const MultiPoly& p, Var v, const Rational& value) {
  return substitute(p, v, MultiPoly(value));
}

bool is_nonneg(const MultiPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return sgn(t.second) > 0; });
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (b.is_constant()) {
    MultiPoly q = a;
    q *= Rational(1) / b.constant_term();
    return q;
  }
  const auto& [lead_m, lead_c] = b.leading();
  MultiPoly rem = a;
  MultiPoly quot;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    auto qm = rm.divide(lead_m);
    if (!qm) return std::nullopt;
    MultiPoly t = MultiPoly::term(rc / lead_c, *qm);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) {
    throw std::domain_error("inexact polynomial division: (" + a.to_string() + ") / (" +
                            b.to_string() + ")");
  }
  return *q;
}

}  // namespace jstirling
