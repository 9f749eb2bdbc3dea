#include "jstirling/positivity.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

namespace jstirling {

unsigned worker_threads() {
  if (const char* env = std::getenv("JSTIRLING_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Combo = std::vector<std::size_t>;

std::vector<Combo> combinations(std::size_t n, std::size_t r) {
  std::vector<Combo> out;
  if (r > n) return out;
  Combo c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

bool nonneg(const MultiPoly& p) { return is_nonneg(p); }
bool nonneg(const Rational& q) { return sgn(q) >= 0; }
MultiPoly as_poly(const MultiPoly& p) { return p; }
MultiPoly as_poly(const Rational& q) { return MultiPoly(q); }

// Structural filter on a minor: true when the minor is identically zero for
// the matrix at hand and need not be evaluated.
using SkipFn = std::function<bool(const Combo& rows, const Combo& cols)>;
using RowSkipFn = std::function<bool(const Combo& rows)>;

template <typename Scalar>
std::optional<MinorWitness> scan_minors(const Matrix<Scalar>& m, std::size_t max_order, const RowSkipFn& skip_rows,
                                        const SkipFn& skip, unsigned threads) {
  if (threads == 0) threads = worker_threads();
  const std::size_t top = std::min({max_order, m.rows(), m.cols()});
  for (std::size_t r = 1; r <= top; ++r) {
    const auto row_sets = combinations(m.rows(), r);
    const auto col_sets = combinations(m.cols(), r);
    const std::size_t ncols = col_sets.size();
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    std::atomic<std::size_t> next_row{0};
    std::atomic<std::size_t> best{kNone};
    std::mutex witness_mutex;
    std::optional<MinorWitness> witness;

    auto work = [&] {
      while (true) {
        const std::size_t ri = next_row.fetch_add(1);
        if (ri >= row_sets.size() || ri * ncols >= best.load()) return;
        const Combo& rows = row_sets[ri];
        if (skip_rows && skip_rows(rows)) continue;
        for (std::size_t ci = 0; ci < ncols; ++ci) {
          const std::size_t flat = ri * ncols + ci;
          if (flat >= best.load()) break;
          const Combo& cols = col_sets[ci];
          if (skip && skip(rows, cols)) continue;
          Scalar d = det(m.submatrix(rows, cols));
          if (nonneg(d)) continue;
          std::lock_guard<std::mutex> lock(witness_mutex);
          if (flat < best.load()) {
            best.store(flat);
            witness = MinorWitness{rows, cols, as_poly(d)};
          }
          break;
        }
      }
    };

    const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(threads, row_sets.size()));
    if (n_threads <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(n_threads);
      for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    if (witness) return witness;
  }
  return std::nullopt;
}

CheckReport make_report(std::string name, CheckScope scope, std::optional<MinorWitness> w) {
  CheckReport rep;
  rep.check = std::move(name);
  rep.scope = scope;
  rep.verdict = w ? Verdict::Refuted : Verdict::Certified;
  rep.witness = std::move(w);
  return rep;
}

// Minors of the Toeplitz matrix (a_{j-i}) that contain a zero block are
// identically zero: a nonzero minor needs i_t <= j_t for every t, and for a
// finite sequence of degree d also j_t <= i_t + d.
// A minor with j_t < i_{t+1} (or j_{t+1} > i_t + d) is block triangular and
// factors into two minors of lower order, which were already checked.
// Shifting every row and column index by one leaves a Toeplitz minor
// unchanged and moves it lexicographically earlier, so the first violation
// always has row 0 in its row set.
bool toeplitz_row_filter(const Combo& rows) { return rows.front() != 0; }

SkipFn toeplitz_filter(SequenceKind kind, std::size_t len) {
  const std::size_t d = len == 0 ? 0 : len - 1;
  return [kind, d](const Combo& rows, const Combo& cols) {
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (cols[t] < rows[t]) return true;
      if (kind == SequenceKind::FiniteZeroPadded && cols[t] > rows[t] + d) return true;
      if (t + 1 < rows.size()) {
        if (cols[t] < rows[t + 1]) return true;
        if (kind == SequenceKind::FiniteZeroPadded && cols[t + 1] > rows[t] + d) return true;
      }
    }
    return false;
  };
}

std::size_t toeplitz_size(std::size_t len, SequenceKind kind, std::size_t max_order) {
  if (kind == SequenceKind::TruncatedInfinite) return len;
  // A minor of order r that does not split into independent blocks spans at
  // most r*d + 1 consecutive indices after shifting its first row to 0.
  const std::size_t d = len - 1;
  return std::max({max_order * d + 1, max_order, len});
}

template <typename Scalar>
Matrix<Scalar> build_toeplitz(const std::vector<Scalar>& a, std::size_t size) {
  Matrix<Scalar> m(size, size, Scalar(0));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size && j - i < a.size(); ++j) m(i, j) = a[j - i];
  }
  return m;
}

}  // namespace

CheckReport strong_log_concave_check(const PolySequence& s) {
  const std::size_t len = s.items.size();
  auto at = [&](std::size_t i) -> MultiPoly { return i < len ? s.items[i] : MultiPoly{}; };
  for (std::size_t k = 1; k < len; ++k) {
    for (std::size_t l = k; l < len; ++l) {
      MultiPoly d = at(k) * at(l) - at(k - 1) * at(l + 1);
      if (!is_nonneg(d)) {
        return make_report("strong_log_concave", {2, len}, MinorWitness{{k - 1, k}, {l, l + 1}, d});
      }
    }
  }
  return make_report("strong_log_concave", {2, len}, std::nullopt);
}

CheckReport strong_log_convex_check(const PolySequence& s) {
  const std::size_t len = s.items.size();
  for (std::size_t m = 1; m + 1 < len; ++m) {
    for (std::size_t n = m; n + 1 < len; ++n) {
      MultiPoly d = s.items[m - 1] * s.items[n + 1] - s.items[m] * s.items[n];
      if (!is_nonneg(d)) {
        return make_report("strong_log_convex", {2, len}, MinorWitness{{m - 1, m}, {n, n + 1}, d});
      }
    }
  }
  return make_report("strong_log_convex", {2, len}, std::nullopt);
}

CheckReport matrix_tp_check(const PolyMatrix& m, std::size_t max_order, unsigned threads) {
  if (max_order == 0) throw std::invalid_argument("max_order must be >= 1");
  auto w = scan_minors(m, max_order, nullptr, nullptr, threads);
  return make_report("matrix_tp", {max_order, std::max(m.rows(), m.cols())}, std::move(w));
}

PolyMatrix toeplitz_block(const PolySequence& s, std::size_t max_order) {
  if (s.items.empty()) throw std::invalid_argument("empty sequence");
  return build_toeplitz(s.items, toeplitz_size(s.items.size(), s.kind, max_order));
}

CheckReport toeplitz_pf_check(const PolySequence& s, std::size_t max_order, unsigned threads) {
  if (max_order == 0) throw std::invalid_argument("max_order must be >= 1");
  const PolyMatrix m = toeplitz_block(s, max_order);
  auto w = scan_minors(m, max_order, toeplitz_row_filter, toeplitz_filter(s.kind, s.items.size()), threads);
  return make_report("toeplitz_pf", {max_order, s.items.size()}, std::move(w));
}

CheckReport numeric_pf_check(const std::vector<Rational>& values, SequenceKind kind,
                             std::size_t max_order, unsigned threads) {
  if (max_order == 0) throw std::invalid_argument("max_order must be >= 1");
  if (values.empty()) throw std::invalid_argument("empty sequence");
  const auto m = build_toeplitz(values, toeplitz_size(values.size(), kind, max_order));
  auto w = scan_minors(m, max_order, toeplitz_row_filter, toeplitz_filter(kind, values.size()), threads);
  return make_report("numeric_pf", {max_order, values.size()}, std::move(w));
}

LemmaTriangleReport lemma_triangle_check(const CoefficientFamily& a, const CoefficientFamily& b,
                                         const MultiPoly& first, unsigned n_max, unsigned base_n) {
  if (n_max < base_n) throw std::invalid_argument("n_max must be >= base_n");
  LemmaTriangleReport rep;
  const unsigned rows = n_max - base_n + 1;
  auto& t = rep.triangle;
  t.resize(rows);
  t[0] = {first};
  for (unsigned r = 1; r < rows; ++r) {
    const unsigned n = base_n + r;
    t[r].resize(r + 1);
    for (unsigned k = 0; k <= r; ++k) {
      MultiPoly v;
      if (k < r) v += a(n, k) * t[r - 1][k];
      if (k > 0) v += b(n, k) * t[r - 1][k - 1];
      t[r][k] = std::move(v);
    }
  }
  auto entry = [&](unsigned r, unsigned k) -> MultiPoly { return k <= r ? t[r][k] : MultiPoly{}; };

  // Monotone, nonnegative coefficient families.
  for (unsigned r = 1; r < rows && rep.monotone; ++r) {
    const unsigned n = base_n + r;
    for (unsigned k = 1; k <= r; ++k) {
      if (!is_nonneg(a(n, k - 1)) || !is_nonneg(a(n, k) - a(n, k - 1)) || !is_nonneg(b(n, k - 1)) ||
          !is_nonneg(b(n, k) - b(n, k - 1))) {
        rep.monotone = false;
        break;
      }
    }
  }
  for (unsigned r = 0; r < rows && rep.rows_log_concave; ++r) {
    rep.rows_log_concave = strong_log_concave_check({t[r], SequenceKind::FiniteZeroPadded}).certified();
  }

  std::optional<MinorWitness> w;
  for (unsigned m = 0; m < rows && !w; ++m) {
    for (unsigned n = m; n < rows && !w; ++n) {
      for (unsigned k = 0; k <= n && !w; ++k) {
        for (unsigned l = k; l <= n; ++l) {
          MultiPoly d = entry(m, k) * entry(n, l) - entry(m, l) * entry(n, k);
          if (!is_nonneg(d)) {
            w = MinorWitness{{base_n + m, base_n + n}, {k, l}, d};
            break;
          }
        }
      }
    }
  }
  rep.conclusion = make_report("triangle_cross_rows", {2, rows}, std::move(w));

  if (!rep.monotone) {
    rep.failed = TriangleHypothesis::Monotonicity;
  } else if (!rep.rows_log_concave) {
    rep.failed = TriangleHypothesis::RowLogConcavity;
  }
  rep.overall = rep.conclusion;
  rep.overall.check = "lemma_triangle";
  if (rep.failed != TriangleHypothesis::None) {
    rep.overall.verdict = Verdict::Refuted;
    rep.overall.note = rep.failed == TriangleHypothesis::Monotonicity
                           ? "hypothesis failed: coefficient families not monotone/nonnegative"
                           : "hypothesis failed: a row is not strongly log-concave";
  }
  return rep;
}

CheckReport transform_logconvexity_probe(long z0, TriangleKind kind, unsigned n_max,
                                         const std::vector<Rational>& seed) {
  if (z0 != 0 && z0 != 1) throw std::invalid_argument("probe is defined for z0 in {0, 1}");
  if (seed.size() < n_max + 1) throw std::invalid_argument("seed shorter than n_max + 1");
  for (std::size_t i = 0; i < seed.size(); ++i) {
    if (sgn(seed[i]) <= 0) throw std::invalid_argument("seed must be positive");
    if (i >= 1 && i + 1 < seed.size() && seed[i] * seed[i] > seed[i - 1] * seed[i + 1]) {
      throw std::invalid_argument("seed must be log-convex");
    }
  }
  const TriangleTable table(kind, n_max);
  std::vector<Rational> w(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      w[n] += evaluate(table.at(n, k), Var::z, Rational(z0)).constant_term() * seed[k];
    }
  }
  std::optional<MinorWitness> wit;
  for (unsigned i = 1; i + 1 <= n_max; ++i) {
    Rational d = w[i - 1] * w[i + 1] - w[i] * w[i];
    if (sgn(d) < 0) {
      wit = MinorWitness{{i - 1, i}, {i, i + 1}, MultiPoly(d)};
      break;
    }
  }
  auto rep = make_report("transform_logconvexity_probe", {2, n_max + 1u}, std::move(wit));
  if (!rep.certified()) rep.note = "conjecture counterexample candidate";
  return rep;
}

}  // namespace jstirling
