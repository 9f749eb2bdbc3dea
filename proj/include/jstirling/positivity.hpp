#pragma once

// Certification and refutation of coefficientwise positivity properties:
// strong log-concavity/convexity of polynomial sequences, total positivity
// of polynomial matrices (bounded minor order), and Polya-frequency checks
// through Toeplitz matrices.
//
// Every certificate is relative to a finite scope (minor order, window).
// A refutation carries the lexicographically first violating minor in
// (order, rows, cols) order, independent of the number of worker threads.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jstirling/jacobi_stirling.hpp"
#include "jstirling/matrix.hpp"
#include "jstirling/poly.hpp"

namespace jstirling {

enum class SequenceKind { FiniteZeroPadded, TruncatedInfinite };

struct PolySequence {
  std::vector<MultiPoly> items;
  SequenceKind kind = SequenceKind::FiniteZeroPadded;
};

enum class Verdict { Certified, Refuted };

struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  MultiPoly det;
};

struct CheckScope {
  std::size_t max_order = 0;
  std::size_t window = 0;
};

struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::Certified;
  CheckScope scope;
  std::optional<MinorWitness> witness;
  std::string note;

  bool certified() const { return verdict == Verdict::Certified; }
};

/// Worker count for minor enumeration: JSTIRLING_THREADS if set and
/// positive, otherwise the hardware concurrency.
unsigned worker_threads();

/// f_k f_l - f_{k-1} f_{l+1} >= 0 for all 1 <= k <= l; entries past the end are 0.
/// Witness rows {k-1,k}, cols {l,l+1}.
CheckReport strong_log_concave_check(const PolySequence& s);

/// f_{m-1} f_{n+1} - f_m f_n >= 0 for all 1 <= m <= n with n+1 inside the sequence.
/// Witness rows {m-1,m}, cols {n,n+1}.
CheckReport strong_log_convex_check(const PolySequence& s);

/// Every minor of order <= max_order is coefficientwise nonnegative.
CheckReport matrix_tp_check(const PolyMatrix& m, std::size_t max_order, unsigned threads = 0);

/// Toeplitz matrix (a_{j-i}) of the sequence, then matrix_tp_check.
/// FiniteZeroPadded: entries past the list are zero, and the enumerated block
/// is large enough to cover every minor of the infinite matrix up to max_order.
/// TruncatedInfinite: only minors whose entries all lie inside the list.
CheckReport toeplitz_pf_check(const PolySequence& s, std::size_t max_order, unsigned threads = 0);

/// Same as toeplitz_pf_check for a sequence of rational constants.
CheckReport numeric_pf_check(const std::vector<Rational>& values, SequenceKind kind,
                             std::size_t max_order, unsigned threads = 0);

/// Toeplitz block used by the PF checks (exposed for tests).
PolyMatrix toeplitz_block(const PolySequence& s, std::size_t max_order);

using CoefficientFamily = std::function<MultiPoly(unsigned n, unsigned k)>;

enum class TriangleHypothesis { None, Monotonicity, RowLogConcavity };

struct LemmaTriangleReport {
  CheckReport overall;
  TriangleHypothesis failed = TriangleHypothesis::None;
  bool monotone = true;
  bool rows_log_concave = true;
  CheckReport conclusion;  // T_{m,k} T_{n,l} - T_{m,l} T_{n,k} >= 0
  std::vector<std::vector<MultiPoly>> triangle;
};

/// Triangle T_{n,k} = a(n,k) T_{n-1,k} + b(n,k) T_{n-1,k-1} for rows
/// base_n..n_max, with T_{base_n,0} = first and 0 <= k <= n - base_n.
/// Verifies monotone nonnegative coefficient families, strong log-concavity
/// of each row and the cross-row inequality for m <= n, k <= l.
LemmaTriangleReport lemma_triangle_check(const CoefficientFamily& a, const CoefficientFamily& b,
                                         const MultiPoly& first, unsigned n_max, unsigned base_n = 0);

/// w_n = sum_k T(n,k; z0) s_k for the chosen triangle; checks log-convexity of
/// w_0..w_{n_max}. Requires a positive log-convex seed of length >= n_max+1.
CheckReport transform_logconvexity_probe(long z0, TriangleKind kind, unsigned n_max,
                                         const std::vector<Rational>& seed);

}  // namespace jstirling
