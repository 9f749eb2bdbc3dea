#include "jstirling/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace jstirling {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::from_multi(const MultiPoly& p, Var v) { return UPoly(p.univariate_coefficients(v)); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int UPoly::sign_at(const Rational& x) const { return sgn((*this)(x)); }

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  std::vector<Rational> m(c_);
  const Rational lead = c_.back();
  for (auto& q : m) q /= lead;
  return UPoly(std::move(m));
}

UPoly operator-(const UPoly& a) {
  std::vector<Rational> c(a.c_);
  for (auto& q : c) q = -q;
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] / b.leading();
    quot[static_cast<std::size_t>(i - db)] = q;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<UPoly> out;
  UPoly dp = p.derivative();
  UPoly a0 = gcd(p, dp);
  UPoly b = divmod(p, a0).first;
  UPoly c = divmod(dp, a0).first;
  UPoly d = c - b.derivative();
  while (b.degree() >= 1) {
    UPoly a = gcd(b, d);
    out.push_back(a.monic());
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    UPoly r = -divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

namespace {

int sign_at(const UPoly& p, const Bound& b) {
  switch (b.kind) {
    case Bound::Kind::PosInf:
      return sgn(p.leading());
    case Bound::Kind::NegInf:
      return (p.degree() % 2 == 0) ? sgn(p.leading()) : -sgn(p.leading());
    case Bound::Kind::Finite:
      break;
  }
  return p.sign_at(b.value);
}

int variations(const std::vector<UPoly>& seq, const Bound& b) {
  int count = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign_at(p, b);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Cauchy bound: every root has |x| < 1 + max |c_i / c_n|.
Rational root_bound(const UPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(i)] / p.leading());
    if (r > m) m = r;
  }
  // Round up to a power of two so bisection midpoints stay dyadic.
  Rational bound = 1;
  while (bound <= m + 1) bound *= 2;
  return bound;
}

// Simplest rational (smallest denominator) in [lo, hi], via Stern-Brocot.
Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // lo and hi share integer part fl; recurse on reciprocals of fractional parts.
  Rational flo = lo - fl;
  Rational fhi = hi - fl;
  Rational inner = simplest_between(1 / fhi, 1 / flo);
  return Rational(fl) + 1 / inner;
}

}  // namespace

int count_roots(const std::vector<UPoly>& sturm, const Bound& lo, const Bound& hi) {
  if (sturm.empty()) return 0;
  return variations(sturm, lo) - variations(sturm, hi);
}

RootReport analyze_roots(const UPoly& p, const Rational& isolation_width) {
  if (p.is_zero()) throw std::domain_error("root analysis of the zero polynomial");
  RootReport rep;
  rep.poly = p;
  rep.degree = p.degree();
  if (p.degree() == 0) return rep;

  const auto factors = squarefree_decomposition(p);
  rep.distinct = factors.size() <= 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const UPoly& f = factors[i];
    if (f.degree() < 1) continue;
    const unsigned mult = static_cast<unsigned>(i + 1);
    const auto seq = sturm_sequence(f);
    const int nonpos = count_roots(seq, Bound::neg_inf(), Bound::at(0));
    const int pos = count_roots(seq, Bound::at(0), Bound::pos_inf());
    rep.distinct_real_root_count += nonpos + pos;
    rep.nonpositive_real_root_count += nonpos * static_cast<int>(mult);
    rep.positive_real_root_count += pos * static_cast<int>(mult);

    // Isolate by bisection over (-B, B].
    const Rational bound = root_bound(f);
    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    while (!work.empty()) {
      auto [lo, hi] = work.back();
      work.pop_back();
      const int k = count_roots(seq, Bound::at(lo), Bound::at(hi));
      if (k == 0) continue;
      if (k == 1) {
        RootInterval ri{lo, hi, false, mult};
        if (f.sign_at(hi) == 0) {
          ri.lo = hi;
          ri.exact = true;
        } else {
          while (ri.hi - ri.lo > isolation_width) {
            Rational mid = (ri.lo + ri.hi) / 2;
            if (f.sign_at(mid) == 0) {
              ri.lo = ri.hi = mid;
              ri.exact = true;
              break;
            }
            if (count_roots(seq, Bound::at(ri.lo), Bound::at(mid)) == 1) {
              ri.hi = mid;
            } else {
              ri.lo = mid;
            }
          }
          if (!ri.exact) {
            Rational guess = simplest_between(ri.lo, ri.hi);
            if (guess > ri.lo && f.sign_at(guess) == 0) {
              ri.lo = ri.hi = guess;
              ri.exact = true;
            }
          }
        }
        rep.roots.push_back(ri);
        continue;
      }
      Rational mid = (lo + hi) / 2;
      work.emplace_back(lo, mid);
      work.emplace_back(mid, hi);
    }
  }
  std::sort(rep.roots.begin(), rep.roots.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
  for (const auto& r : rep.roots) {
    if (r.exact) rep.rational_roots.push_back(r.lo);
  }
  rep.real_root_count = rep.nonpositive_real_root_count + rep.positive_real_root_count;
  rep.has_positive_real_root = rep.positive_real_root_count > 0;
  return rep;
}

}  // namespace jstirling
