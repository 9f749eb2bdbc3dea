#include "jstirling/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "jstirling/diagonal_gf.hpp"
#include "jstirling/jacobi_stirling.hpp"
#include "jstirling/lambert.hpp"
#include "jstirling/ramanujan.hpp"
#include "jstirling/symfun.hpp"

namespace jstirling {

bool SuiteResult::ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const SuiteItem& it) { return it.informational || it.report.certified(); });
}

namespace {

CheckReport boolean_report(std::string name, bool ok, std::string note_on_failure, CheckScope scope = {}) {
  CheckReport r;
  r.check = std::move(name);
  r.scope = scope;
  r.verdict = ok ? Verdict::Certified : Verdict::Refuted;
  if (!ok) r.note = std::move(note_on_failure);
  return r;
}

CheckReport renamed(CheckReport r, std::string name) {
  r.check = std::move(name);
  return r;
}

std::string label(const std::string& base, std::initializer_list<std::pair<const char*, std::string>> params) {
  std::ostringstream os;
  os << base << '[';
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << ',';
    os << k << '=' << v;
    first = false;
  }
  os << ']';
  return os.str();
}

std::string str(const Rational& q) { return rational_to_string(q); }

// Published reference values of both triangles, (n, k, value), used by the `tables` suite.
struct TableRow {
  unsigned n;
  unsigned k;
  const char* value;
};

const std::vector<TableRow> kSecondKindTable = {
    {1, 1, "1"},
    {2, 1, "z+1"}, {2, 2, "1"},
    {3, 1, "(z+1)^2"}, {3, 2, "5+3*z"}, {3, 3, "1"},
    {4, 1, "(z+1)^3"}, {4, 2, "21+24*z+7*z^2"}, {4, 3, "14+6*z"}, {4, 4, "1"},
    {5, 1, "(z+1)^4"}, {5, 2, "85+141*z+79*z^2+15*z^3"}, {5, 3, "147+120*z+25*z^2"}, {5, 4, "30+10*z"},
    {5, 5, "1"},
    {6, 1, "(z+1)^5"}, {6, 2, "341+738*z+604*z^2+222*z^3+31*z^4"}, {6, 3, "1408+1662*z+664*z^2+90*z^3"},
    {6, 4, "627+400*z+65*z^2"}, {6, 5, "55+15*z"}, {6, 6, "1"},
};

const std::vector<TableRow> kFirstKindTable = {
    {1, 1, "1"},
    {2, 1, "z+1"}, {2, 2, "1"},
    {3, 1, "2*z^2+6*z+4"}, {3, 2, "3*z+5"}, {3, 3, "1"},
    {4, 1, "6*z^3+36*z^2+66*z+36"}, {4, 2, "11*z^2+48*z+49"}, {4, 3, "6*z+14"}, {4, 4, "1"},
    {5, 1, "24*z^4+240*z^3+840*z^2+1200*z+576"}, {5, 2, "50*z^3+404*z^2+1030*z+820"}, {5, 3, "35*z^2+200*z+273"},
    {5, 4, "10*z+30"}, {5, 5, "1"},
};

CheckReport table_check(TriangleKind kind, const std::vector<TableRow>& rows, unsigned max_n) {
  const TriangleTable t(kind, max_n);
  const std::string name = kind == TriangleKind::SecondKind ? "table_second_kind" : "table_first_kind";
  for (const auto& r : rows) {
    const MultiPoly expected = MultiPoly::parse(r.value);
    if (t.at(r.n, r.k) != expected) {
      return boolean_report(name, false,
                            "entry (" + std::to_string(r.n) + "," + std::to_string(r.k) + ") is " +
                                t.at(r.n, r.k).to_string() + ", expected " + expected.to_string());
    }
  }
  return boolean_report(name, true, "", {0, max_n});
}

SuiteResult suite_tables(const SuiteOptions&) {
  return {"tables",
          {{table_check(TriangleKind::SecondKind, kSecondKindTable, 6)},
           {table_check(TriangleKind::FirstKind, kFirstKindTable, 5)}}};
}

SuiteResult suite_routes(const SuiteOptions& o) {
  const unsigned n_max = o.n.value_or(12);
  SuiteResult res{"routes", {}};
  for (const TriangleKind kind : {TriangleKind::SecondKind, TriangleKind::FirstKind}) {
    const TriangleTable t(kind, n_max);
    std::string failure;
    for (unsigned n = 0; n <= n_max && failure.empty(); ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        const MultiPoly via = kind == TriangleKind::SecondKind ? js_second_via_h(n, k) : js_first_via_e(n, k);
        if (via != t.at(n, k)) {
          failure = "routes differ at (" + std::to_string(n) + "," + std::to_string(k) + ")";
          break;
        }
      }
    }
    const std::string name = kind == TriangleKind::SecondKind ? "route_equivalence_second" : "route_equivalence_first";
    res.items.push_back({boolean_report(name, failure.empty(), failure, {0, n_max})});
  }
  return res;
}

SuiteResult suite_identities(const SuiteOptions& o) {
  const unsigned n_conn = o.n.value_or(10);
  SuiteResult res{"identities", {}};
  bool conn = true;
  unsigned bad = 0;
  for (unsigned n = 0; n <= n_conn && conn; ++n) {
    conn = connection_check(n);
    bad = n;
  }
  res.items.push_back({boolean_report("connection", conn, "fails at n=" + std::to_string(bad), {0, n_conn})});
  res.items.push_back(
      {boolean_report("inversion", inversion_check(n_conn), "inverse relation fails", {0, n_conn + 1})});

  const unsigned n_prod = std::max(n_conn, 12u);
  const TriangleTable js(TriangleKind::FirstKind, n_prod);
  std::string failure;
  for (unsigned n = 0; n <= n_prod && failure.empty(); ++n) {
    const auto coeffs = first_kind_product(n).coefficients_in(Var::y);
    for (unsigned k = 0; k <= n; ++k) {
      const MultiPoly c = k < coeffs.size() ? coeffs[k] : MultiPoly{};
      if (c != js.at(n, k)) {
        failure = "coefficient of y^" + std::to_string(k) + " differs at n=" + std::to_string(n);
        break;
      }
    }
  }
  res.items.push_back({boolean_report("first_kind_product", failure.empty(), failure, {0, n_prod})});
  return res;
}

const std::vector<Rational>& default_z_samples() {
  static const std::vector<Rational> z = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)};
  return z;
}

SuiteResult suite_diagonal_pf(const SuiteOptions& o) {
  const auto& zs = o.z_samples.empty() ? default_z_samples() : o.z_samples;
  const unsigned k_max = o.k.value_or(3);
  const std::size_t order = o.order.value_or(4);
  const std::size_t window = o.window.value_or(12);
  SuiteResult res{"diagonal-pf", {}};
  for (const auto& z0 : zs) {
    for (unsigned k = 1; k <= k_max; ++k) {
      res.items.push_back({diagonal_root_check(k, z0)});
      res.items.push_back(
          {diagonal_pf_check(k, z0, order, window, std::max<std::size_t>(window, 20), order + 2, o.threads)});
    }
  }
  return res;
}

PolySequence shifted(std::vector<MultiPoly> items, long offset, SequenceKind kind) {
  for (auto& p : items) p = shift_z(p, offset);
  return {std::move(items), kind};
}

SuiteResult suite_rows_columns(const SuiteOptions& o) {
  const unsigned n_rows = o.n.value_or(10);
  const unsigned k_cols = o.k.value_or(4);
  const std::size_t order = o.order.value_or(3);
  const std::size_t terms = o.window.value_or(10);
  const unsigned n_js = o.n ? *o.n : 8;
  SuiteResult res{"rows-columns", {}};

  const unsigned top = std::max<unsigned>({n_rows, n_js, k_cols + static_cast<unsigned>(terms)});
  const TriangleTable js2(TriangleKind::SecondKind, top);
  const TriangleTable js1(TriangleKind::FirstKind, top);

  // Rows of the second kind: z <- z - 1 and, more weakly, z <- z + 1.
  for (const long offset : {-1L, 1L}) {
    CheckReport agg = boolean_report("", true, "");
    for (unsigned n = 0; n <= n_rows && agg.certified(); ++n) {
      std::vector<MultiPoly> row;
      for (unsigned k = 0; k <= n; ++k) row.push_back(js2.at(n, k));
      agg = strong_log_concave_check(shifted(row, offset, SequenceKind::FiniteZeroPadded));
      if (!agg.certified()) agg.note = "row n=" + std::to_string(n);
    }
    agg.scope = {2, n_rows};
    res.items.push_back({renamed(agg, label("second_kind_rows_log_concave", {{"shift", std::to_string(offset)}}))});
  }

  for (unsigned k = 1; k <= k_cols; ++k) {
    std::vector<MultiPoly> col;
    for (unsigned n = k; n < k + terms; ++n) col.push_back(js2.at(n, k));
    auto rep = toeplitz_pf_check(shifted(col, -1, SequenceKind::TruncatedInfinite), order, o.threads);
    res.items.push_back({renamed(rep, label("second_kind_column_pf", {{"k", std::to_string(k)}}))});
  }

  for (unsigned n = 1; n <= n_js; ++n) {
    std::vector<MultiPoly> row;
    for (unsigned k = 1; k <= n; ++k) row.push_back(js1.at(n, k));
    auto rep = toeplitz_pf_check(shifted(row, -1, SequenceKind::FiniteZeroPadded), order, o.threads);
    res.items.push_back({renamed(rep, label("first_kind_row_pf", {{"n", std::to_string(n)}}))});
  }

  {
    std::vector<MultiPoly> col;
    for (unsigned n = 1; n <= terms; ++n) col.push_back(js1.at(n, n - 1));
    auto rep = toeplitz_pf_check(shifted(col, -1, SequenceKind::TruncatedInfinite), order, o.threads);
    res.items.push_back({renamed(rep, "first_kind_subdiagonal_pf")});
  }

  // The triangle lemma applied to the defining recurrence of the second kind.
  const CoefficientFamily a = [](unsigned, unsigned k) {
    const MultiPoly kk(static_cast<long>(k));
    return kk * (kk + MultiPoly::var(Var::z));
  };
  const CoefficientFamily b = [](unsigned, unsigned) { return MultiPoly(1); };
  auto lemma = lemma_triangle_check(a, b, MultiPoly(1), std::min(n_rows, 6u));
  res.items.push_back({renamed(lemma.overall, "triangle_lemma_second_kind")});
  return res;
}

PolyMatrix first_kind_reflected(unsigned size, long offset) {
  const TriangleTable t(TriangleKind::FirstKind, size - 1);
  PolyMatrix m(size, size);
  for (unsigned n = 0; n < size; ++n) {
    for (unsigned k = 0; k <= n; ++k) m(n, k) = shift_z(t.at(n, n - k), offset);
  }
  return m;
}

PolyMatrix symmetric_toeplitz(SymKind kind, unsigned args, unsigned size) {
  const auto row = symmetric_row(kind, size, jacobi_weights(args));
  PolyMatrix m(size, size);
  for (unsigned i = 0; i < size; ++i) {
    for (unsigned j = i; j < size; ++j) m(i, j) = row[j - i];
  }
  return m;
}

SuiteResult suite_total_positivity(const SuiteOptions& o) {
  const unsigned size = o.n.value_or(8);
  const std::size_t order = o.order.value_or(3);
  SuiteResult res{"total-positivity", {}};
  res.items.push_back({renamed(matrix_tp_check(triangle_matrix(TriangleKind::SecondKind, size, -1), order, o.threads),
                               "tp_second_kind")});
  res.items.push_back({renamed(matrix_tp_check(first_kind_reflected(size, -1), order, o.threads),
                               "tp_first_kind_reflected")});
  res.items.push_back({renamed(matrix_tp_check(triangle_matrix(TriangleKind::FirstKind, size, -1), order, o.threads),
                               "tp_first_kind")});
  res.items.push_back({renamed(matrix_tp_check(symmetric_toeplitz(SymKind::Elementary, 6, 5), order, o.threads),
                               "tp_elementary_toeplitz")});
  res.items.push_back({renamed(matrix_tp_check(symmetric_toeplitz(SymKind::Homogeneous, 6, 5), order, o.threads),
                               "tp_homogeneous_toeplitz")});
  return res;
}

SuiteResult suite_log_convex(const SuiteOptions& o) {
  const unsigned n_max = o.n.value_or(8);
  SuiteResult res{"log-convex", {}};
  PolySequence j, prod, bell;
  for (unsigned n = 0; n <= n_max; ++n) {
    j.items.push_back(generating_J(n));
    prod.items.push_back(first_kind_product(n));
    bell.items.push_back(bell_poly(n));
  }
  res.items.push_back({renamed(strong_log_convex_check(j), "second_kind_row_generating_log_convex")});
  res.items.push_back({renamed(strong_log_convex_check(prod), "first_kind_product_log_convex")});
  res.items.push_back({renamed(strong_log_convex_check(bell), "bell_log_convex")});
  return res;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer double_factorial_odd(long m) {
  Integer f = 1;
  for (long i = m; i > 1; i -= 2) f *= i;
  return f;
}

SuiteResult suite_ramanujan(const SuiteOptions& o) {
  const unsigned n_def = o.n.value_or(7);
  const unsigned n_rel = std::max(n_def, 10u);
  SuiteResult res{"ramanujan", {}};
  const QFamily fam(std::max(n_def + 1, n_rel));

  PolySequence q;
  for (unsigned n = 1; n <= n_def + 1; ++n) q.items.push_back(fam.Q(n));
  auto lc = strong_log_convex_check(q);
  if (lc.witness) {
    // Sequence index i holds Q_{i+1}.
    for (auto& r : lc.witness->rows) ++r;
    for (auto& c : lc.witness->cols) ++c;
  }
  res.items.push_back({renamed(lc, "generalized_ramanujan_log_convex")});

  std::string failure;
  for (unsigned m = 2; m <= n_def && failure.empty(); ++m) {
    for (unsigned n = m; n <= n_def; ++n) {
      if (!fam.defect(m, n).is_integral()) {
        failure = "non-integral defect at (" + std::to_string(m) + "," + std::to_string(n) + ")";
        break;
      }
    }
  }
  res.items.push_back({boolean_report("defect_integral", failure.empty(), failure, {2, n_def})});

  const MultiPoly u = fam.Qnk(3, 1) * fam.Qnk(3, 1) - fam.Qnk(3, 0) * fam.Qnk(3, 2);
  const MultiPoly expected = MultiPoly::parse("6*x^2+15*x+10+21*t*x+28*t+19*t^2");
  res.items.push_back({boolean_report("u3_witness", u == expected, "U_3(1,1)-U_3(0,2) = " + u.to_string())});

  bool hom = true, spec = true, poq = true, sums = true;
  std::string where;
  const MultiPoly y = MultiPoly::var(Var::y);
  for (unsigned n = 1; n <= n_rel; ++n) {
    const MultiPoly& qn = fam.Q(n);
    for (const auto& [mono, c] : qn.terms()) {
      if (mono.degree() != n - 1) hom = false;
    }
    MultiPoly s = evaluate(evaluate(evaluate(qn, Var::x, 0), Var::z, 1), Var::t, 0);
    const MultiPoly r = ramanujan_R(n);
    if (s != r) spec = false;
    MultiPoly by_k;
    for (unsigned k = 0; k < n; ++k) by_k += q_nk(n, static_cast<long>(k)) * pow(y, k);
    if (by_k != evaluate(qn, Var::z, 1)) poq = false;

    const Rational at0 = evaluate(r, Var::y, 0).constant_term();
    const Rational at1 = evaluate(r, Var::y, 1).constant_term();
    Integer nn;
    mpz_ui_pow_ui(nn.get_mpz_t(), n, n - 1);
    const auto rc = r.univariate_coefficients(Var::y);
    if (at0 != Rational(factorial(n - 1)) || at1 != Rational(nn) || rc.size() != n ||
        rc.back() != Rational(double_factorial_odd(2 * static_cast<long>(n) - 3))) {
      sums = false;
    }
  }
  res.items.push_back({boolean_report("homogeneity", hom, "a Q_n is not homogeneous of degree n-1", {0, n_rel})});
  res.items.push_back({boolean_report("specialization_to_R", spec, "Q_n(0,y,1,0) != R_n(y)", {0, n_rel})});
  res.items.push_back({boolean_report("y_coefficients", poq, "sum_k Q_{n,k} y^k != Q_n(x,y,1,t)", {0, n_rel})});
  res.items.push_back({boolean_report("ramanujan_checksums", sums, "R_n(0), R_n(1) or leading coefficient wrong",
                                      {0, n_rel})});
  return res;
}

SuiteResult suite_qnk(const SuiteOptions& o) {
  const unsigned n_max = o.n.value_or(8);
  SuiteResult res{"qnk-log-concave", {}};
  const QFamily fam(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    auto rep = strong_log_concave_check({fam.Qnk_row(n), SequenceKind::FiniteZeroPadded});
    res.items.push_back({renamed(rep, label("qnk_row_log_concave", {{"n", std::to_string(n)}}))});
  }
  const CoefficientFamily a = [](unsigned n, unsigned k) {
    const MultiPoly t = MultiPoly::var(Var::t);
    return MultiPoly::var(Var::x) + MultiPoly(static_cast<long>(n) - 1) + t * MultiPoly(static_cast<long>(n + k) - 1);
  };
  const CoefficientFamily b = [](unsigned n, unsigned k) { return MultiPoly(static_cast<long>(n + k) - 2); };
  auto lemma = lemma_triangle_check(a, b, MultiPoly(1), n_max, 1);
  bool agree = true;
  for (unsigned r = 0; r < lemma.triangle.size(); ++r) {
    if (lemma.triangle[r] != fam.Qnk_row(r + 1)) agree = false;
  }
  res.items.push_back({renamed(lemma.overall, "triangle_lemma_qnk")});
  res.items.push_back({boolean_report("triangle_lemma_qnk_matches_family", agree,
                                      "lemma triangle differs from the Q_{n,k} recurrence", {0, n_max})});
  return res;
}

CheckReport numeric_report(const std::string& name, const NumericCheck& c, double tol) {
  std::ostringstream note;
  note.precision(3);
  note << "rel_err=" << c.rel_err << " tol=" << tol;
  CheckReport r = boolean_report(label(name, {{"n", std::to_string(c.n)}, {"at", str(c.point)}}), c.rel_err < tol,
                                 note.str(), {c.n, 1});
  if (r.certified()) r.note = note.str();
  return r;
}

SuiteResult suite_lambert(const SuiteOptions& o) {
  const unsigned n_max = o.n.value_or(12);
  SuiteResult res{"lambert", {}};
  bool ident = true;
  for (unsigned n = 1; n <= n_max && ident; ++n) ident = p_identity_check(n);
  res.items.push_back({boolean_report("p_identity", ident, "(-1)^{n-1} p_n differs from the reversed R_n", {0, n_max})});
  for (unsigned n = 1; n <= n_max; ++n) {
    res.items.push_back({renamed(p_shape_check(n), label("p_shape", {{"n", std::to_string(n)}}))});
  }
  res.items.push_back({boolean_report("tree_series", tree_series_check(n_max), "w exp(-w) != y", {0, n_max})});

  auto tol = [](unsigned n) { return n <= 2 ? 1e-6 : 1e-4; };
  for (const Rational& x0 : {Rational(0), Rational(1, 2), Rational(1)}) {
    for (unsigned n = 1; n <= 4; ++n) {
      res.items.push_back({numeric_report("derivative_formula", derivative_formula_check(n, x0), tol(n))});
    }
  }
  for (const Rational& y0 : {Rational(0), Rational(1, 10), Rational(1, 5)}) {
    for (unsigned n = 1; n <= 4; ++n) {
      res.items.push_back({numeric_report("derivative_formula_R", derivative_formula_check_R(n, y0), tol(n))});
    }
  }
  return res;
}

SuiteResult suite_conjecture(const SuiteOptions& o) {
  const unsigned n_max = o.n.value_or(8);
  SuiteResult res{"conjecture", {}};
  std::vector<Rational> ones(n_max + 1, Rational(1));
  std::vector<Rational> facts;
  for (unsigned i = 0; i <= n_max; ++i) facts.emplace_back(factorial(i));
  res.items.push_back({renamed(transform_logconvexity_probe(1, TriangleKind::SecondKind, n_max, ones),
                               "transform_log_convex[z=1,kind=second,seed=ones]"),
                       true});
  res.items.push_back({renamed(transform_logconvexity_probe(0, TriangleKind::FirstKind, n_max, facts),
                               "transform_log_convex[z=0,kind=first,seed=factorial]"),
                       true});
  return res;
}

using SuiteFn = std::function<SuiteResult(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"tables", suite_tables},
      {"routes", suite_routes},
      {"identities", suite_identities},
      {"diagonal-pf", suite_diagonal_pf},
      {"rows-columns", suite_rows_columns},
      {"total-positivity", suite_total_positivity},
      {"log-convex", suite_log_convex},
      {"ramanujan", suite_ramanujan},
      {"qnk-log-concave", suite_qnk},
      {"lambert", suite_lambert},
      {"conjecture", suite_conjecture},
  };
  return r;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a = {
      {"theorem-1.2", "diagonal-pf"},      {"theorem-1.3", "rows-columns"},  {"theorem-1.4", "total-positivity"},
      {"theorem-1.5", "log-convex"},       {"theorem-1.6", "ramanujan"},     {"lemma-4.4", "qnk-log-concave"},
      {"corollary-5.3", "lambert"},        {"conjecture-4.2", "conjecture"},
  };
  return a;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::optional<std::string> resolve_suite(const std::string& name) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return n;
  }
  if (auto it = aliases().find(name); it != aliases().end()) return it->second;
  return std::nullopt;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  const auto canonical = resolve_suite(name);
  if (!canonical) throw std::invalid_argument("unknown suite '" + name + "'");
  for (const auto& [n, fn] : registry()) {
    if (n == *canonical) return fn(opts);
  }
  throw std::logic_error("suite registry out of sync");
}

std::vector<SuiteResult> verify_all(const SuiteOptions& opts) {
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : registry()) out.push_back(fn(opts));
  return out;
}

CheckReport diagonal_root_check(unsigned k, const Rational& z0) {
  const RootReport rr = root_analysis(k, z0);
  const bool interior = z0 > -1 && z0 < 1;
  const bool ok = rr.all_real() && !rr.has_positive_real_root &&
                  (!interior || (rr.distinct && rr.degree == static_cast<int>(2 * k)));
  CheckReport r = boolean_report(label("diagonal_roots", {{"k", std::to_string(k)}, {"z", str(z0)}}), ok, "",
                                 {0, static_cast<std::size_t>(std::max(rr.degree, 0))});
  if (!ok) {
    std::ostringstream note;
    note << "real roots " << rr.real_root_count << " of degree " << rr.degree;
    for (const auto& q : rr.rational_roots) {
      if (q > 0) note << "; positive root " << rational_to_string(q);
    }
    for (const auto& iv : rr.roots) {
      if (!iv.exact && iv.lo >= 0) note << "; positive root in (" << str(iv.lo) << ", " << str(iv.hi) << ")";
    }
    if (interior && !rr.distinct) note << "; repeated root";
    r.note = note.str();
  }
  return r;
}

std::vector<Rational> diagonal_values(unsigned k, const Rational& z0, unsigned last) {
  const TriangleTable t(TriangleKind::SecondKind, k + last);
  std::vector<Rational> v;
  v.reserve(last + 1);
  for (unsigned n = 0; n <= last; ++n) v.push_back(evaluate(t.at(k + n, n), Var::z, z0).constant_term());
  return v;
}

CheckReport diagonal_pf_check(unsigned k, const Rational& z0, std::size_t order, std::size_t window,
                              std::size_t max_window, std::size_t max_order, unsigned threads) {
  if (order == 0 || window == 0) throw std::invalid_argument("order and window must be positive");
  const std::string name = label("diagonal_pf", {{"k", std::to_string(k)}, {"z", str(z0)}});
  const RootReport rr = root_analysis(k, z0);
  const bool expect_violation = !rr.all_real() || rr.has_positive_real_root;
  if (!expect_violation) {
    max_window = window;
    max_order = order;
  }
  max_window = std::max(max_window, window);
  max_order = std::max(max_order, order);
  const auto values = diagonal_values(k, z0, static_cast<unsigned>(max_window));

  auto run = [&](std::size_t r, std::size_t w) {
    const std::vector<Rational> head(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(w + 1));
    CheckReport rep = numeric_pf_check(head, SequenceKind::TruncatedInfinite, r, threads);
    rep.scope = {r, w};
    return rep;
  };
  // Larger windows at the requested order first, then higher orders at the
  // base window; higher orders on large windows are out of reach.
  CheckReport rep = run(order, window);
  if (rep.certified() && max_window > window) rep = run(order, max_window);
  for (std::size_t r = order + 1; rep.certified() && r <= max_order; ++r) rep = run(r, window);
  rep.check = name;
  if (!rep.certified() && rep.scope.max_order > order) {
    rep.note = "no violation of order <= " + std::to_string(order) + " within window " + std::to_string(max_window) +
               "; first violation has order " + std::to_string(rep.witness->rows.size());
  } else if (rep.certified() && expect_violation) {
    rep.note = "no violation up to order " + std::to_string(max_order) + " within window " + std::to_string(window) +
               " (order " + std::to_string(order) + " within " + std::to_string(max_window) +
               ") although A_k has a positive or non-real root";
  }
  return rep;
}

}  // namespace jstirling
