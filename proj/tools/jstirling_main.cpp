// jstirling: tables, diagonal generating functions, positivity suites,
// Ramanujan and Lambert reports.
//
// Exit status: 0 when every requested check certifies, 1 when any check is
// refuted (witnesses are printed), 2 on a usage error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jstirling/diagonal_gf.hpp"
#include "jstirling/jacobi_stirling.hpp"
#include "jstirling/lambert.hpp"
#include "jstirling/ramanujan.hpp"
#include "jstirling/report_json.hpp"
#include "jstirling/suites.hpp"

namespace js = jstirling;

namespace {

constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Output { Text, Tsv, Json };

struct Flags {
  std::string kind;
  std::optional<unsigned> n;
  std::optional<unsigned> k;
  std::vector<std::string> z;
  std::optional<std::size_t> order;
  std::optional<std::size_t> window;
  std::string output;
  std::string suite;
};

Output parse_output(const std::string& s) {
  if (s == "text") return Output::Text;
  if (s == "tsv") return Output::Tsv;
  if (s == "json") return Output::Json;
  throw UsageError("--output: expected text, tsv or json, got '" + s + "'");
}

std::vector<js::Rational> parse_z(const std::vector<std::string>& raw) {
  std::vector<js::Rational> out;
  for (const auto& s : raw) {
    try {
      out.push_back(js::parse_rational(s));
    } catch (const std::exception& e) {
      throw UsageError("--z: '" + s + "' is not a rational p/q (" + e.what() + ")");
    }
  }
  return out;
}

js::TriangleKind parse_kind(const std::string& s) {
  if (s.empty() || s == "second") return js::TriangleKind::SecondKind;
  if (s == "first") return js::TriangleKind::FirstKind;
  throw UsageError("--kind: expected first or second, got '" + s + "'");
}

void print_json(const js::Json& j) { std::cout << j.dump() << '\n'; }

std::string scope_text(const js::CheckScope& s) {
  return "order=" + std::to_string(s.max_order) + " window=" + std::to_string(s.window);
}

std::string indices(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void print_report(const js::CheckReport& r, Output out, const std::string& suite, bool informational) {
  if (out == Output::Json) {
    js::Json j = js::check_report_json(r);
    if (!suite.empty()) j["suite"] = suite;
    if (informational) j["informational"] = true;
    print_json(j);
    return;
  }
  const char* sep = out == Output::Tsv ? "\t" : "  ";
  std::cout << (r.certified() ? "certified" : "REFUTED  ") << sep;
  if (!suite.empty()) std::cout << suite << sep;
  std::cout << r.check << sep << scope_text(r.scope);
  if (informational && !r.certified()) std::cout << sep << "(finding)";
  if (!r.note.empty()) std::cout << sep << r.note;
  std::cout << '\n';
  if (r.witness) {
    std::cout << "    witness rows " << indices(r.witness->rows) << " cols " << indices(r.witness->cols)
              << " det " << r.witness->det.to_string() << '\n';
  }
}

int print_suites(const std::vector<js::SuiteResult>& results, Output out) {
  bool ok = true;
  for (const auto& res : results) {
    for (const auto& item : res.items) print_report(item.report, out, res.suite, item.informational);
    ok = ok && res.ok();
  }
  return ok ? 0 : 1;
}

js::SuiteOptions suite_options(const Flags& f) {
  js::SuiteOptions o;
  o.z_samples = parse_z(f.z);
  o.n = f.n;
  o.k = f.k;
  o.order = f.order;
  o.window = f.window;
  return o;
}

std::string triangle_symbol(js::TriangleKind kind) { return kind == js::TriangleKind::SecondKind ? "JS" : "js"; }

int cmd_table(const Flags& f) {
  const auto kind = parse_kind(f.kind);
  const Output out = parse_output(f.output.empty() ? "tsv" : f.output);
  const unsigned n_max = f.n.value_or(kind == js::TriangleKind::SecondKind ? 6 : 5);
  const js::TriangleTable t(kind, n_max);
  if (out == Output::Tsv) std::cout << "kind\tn\tk\tvalue\n";
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const auto& v = t.at(n, k);
      switch (out) {
        case Output::Tsv:
          std::cout << js::kind_name(kind) << '\t' << n << '\t' << k << '\t' << v.to_string() << '\n';
          break;
        case Output::Text:
          std::cout << triangle_symbol(kind) << '(' << n << ',' << k << ";z) = " << v.to_string() << '\n';
          break;
        case Output::Json:
          print_json(js::table_entry_json({kind, n, k, v}));
          break;
      }
    }
  }
  return 0;
}

int cmd_diagonal(const Flags& f) {
  const Output out = parse_output(f.output.empty() ? "json" : f.output);
  const unsigned k = f.k.value_or(1);
  const auto zs = parse_z(f.z);
  const auto a = js::numerator_A(k);
  const auto b = js::companion_B(k);
  const auto fk = js::diagonal_poly(k).poly;
  if (out == Output::Json) {
    js::Json j = {{"k", k}, {"A", a.poly().to_string()}, {"B", b.to_string()}, {"f", fk.to_string()}};
    js::Json roots = js::Json::array();
    for (const auto& z0 : zs) {
      js::Json r = js::root_report_json(js::root_analysis(k, z0));
      r["z"] = js::rational_json(z0);
      roots.push_back(r);
    }
    if (!zs.empty()) j["roots"] = roots;
    print_json(j);
    return 0;
  }
  std::cout << "A_" << k << "(x;z) = " << a.poly().to_string() << '\n';
  std::cout << "B_" << k << "(x;z) = " << b.to_string() << '\n';
  std::cout << "f_" << k << "(n;z) = " << fk.to_string() << '\n';
  for (const auto& z0 : zs) {
    const auto rr = js::root_analysis(k, z0);
    std::cout << "z=" << js::rational_to_string(z0) << ": degree " << rr.degree << ", real roots "
              << rr.real_root_count << ", positive " << rr.positive_real_root_count
              << (rr.distinct ? ", distinct" : ", repeated");
    for (const auto& q : rr.rational_roots) std::cout << ", root " << js::rational_to_string(q);
    std::cout << '\n';
  }
  return 0;
}

int cmd_check(const Flags& f) {
  const Output out = parse_output(f.output.empty() ? "text" : f.output);
  if (f.suite.empty()) throw UsageError("--suite is required");
  if (!js::resolve_suite(f.suite)) {
    std::string names;
    for (const auto& n : js::suite_names()) names += " " + n;
    throw UsageError("--suite: unknown suite '" + f.suite + "'; available:" + names);
  }
  return print_suites({js::run_suite(f.suite, suite_options(f))}, out);
}

int cmd_verify_all(const Flags& f) {
  const Output out = parse_output(f.output.empty() ? "text" : f.output);
  return print_suites(js::verify_all(suite_options(f)), out);
}

void emit_poly(Output out, const std::string& name, const js::MultiPoly& p) {
  if (out == Output::Json) {
    print_json({{"name", name}, {"poly", p.to_string()}});
  } else {
    std::cout << name << (out == Output::Tsv ? "\t" : " = ") << p.to_string() << '\n';
  }
}

int cmd_ramanujan(const Flags& f) {
  const Output out = parse_output(f.output.empty() ? "text" : f.output);
  const std::string kind = f.kind.empty() ? "R" : f.kind;
  const unsigned n_max = f.n.value_or(5);
  if (kind == "R") {
    for (unsigned n = 1; n <= n_max; ++n) emit_poly(out, "R_" + std::to_string(n), js::ramanujan_R(n));
  } else if (kind == "Q") {
    const js::QFamily fam(n_max);
    for (unsigned n = 1; n <= n_max; ++n) emit_poly(out, "Q_" + std::to_string(n), fam.Q(n));
  } else if (kind == "qnk") {
    const js::QFamily fam(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
      for (unsigned k = 0; k < n; ++k) {
        if (f.k && *f.k != k) continue;
        emit_poly(out, "Q_{" + std::to_string(n) + "," + std::to_string(k) + "}", fam.Qnk(n, k));
      }
    }
  } else if (kind == "defect") {
    if (n_max < 2) throw UsageError("--n: defects need n >= 2");
    const js::QFamily fam(n_max + 1);
    bool ok = true;
    for (unsigned m = 2; m <= n_max; ++m) {
      if (f.k && *f.k != m) continue;
      for (unsigned n = m; n <= n_max; ++n) {
        const auto d = fam.defect(m, n);
        ok = ok && js::is_nonneg(d) && d.is_integral();
        emit_poly(out, "D_{" + std::to_string(m) + "," + std::to_string(n) + "}", d);
      }
    }
    return ok ? 0 : 1;
  } else {
    throw UsageError("--kind: expected R, Q, qnk or defect for ramanujan, got '" + kind + "'");
  }
  return 0;
}

void emit_numeric(Output out, const std::string& name, const js::NumericCheck& c) {
  if (out == Output::Json) {
    js::Json j = js::numeric_check_json(c);
    j["check"] = name;
    print_json(j);
    return;
  }
  std::cout << name << '\t' << c.n << '\t' << js::rational_to_string(c.point) << '\t'
            << js::rational_to_string(c.step) << '\t' << js::format_double(c.formula_value) << '\t'
            << js::format_double(c.fd_value) << '\t' << js::format_double(c.rel_err) << '\n';
}

int cmd_lambert(const Flags& f) {
  const Output out = parse_output(f.output.empty() ? "text" : f.output);
  const std::string kind = f.kind.empty() ? "p" : f.kind;
  const unsigned n_max = f.n.value_or(kind == "tree" ? 12 : 6);
  if (kind == "p") {
    for (unsigned n = 1; n <= n_max; ++n) emit_poly(out, "p_" + std::to_string(n), js::p_poly(n));
    return 0;
  }
  if (kind == "shape") {
    bool ok = true;
    for (unsigned n = 1; n <= n_max; ++n) {
      auto r = js::p_shape_check(n);
      r.check += "[n=" + std::to_string(n) + "]";
      print_report(r, out, "", false);
      ok = ok && r.certified();
    }
    return ok ? 0 : 1;
  }
  if (kind == "tree") {
    const bool ok = js::tree_series_check(n_max);
    const auto w = js::tree_series(n_max);
    if (out == Output::Json) {
      print_json({{"check", "tree_series"}, {"N", n_max}, {"series", w.to_poly().to_string()}, {"ok", ok}});
    } else {
      std::cout << "w = " << w.to_poly().to_string() << '\n'
                << "w exp(-w) == y mod y^" << n_max + 1 << ": " << (ok ? "yes" : "no") << '\n';
    }
    return ok ? 0 : 1;
  }
  if (kind == "numeric" || kind == "numeric-R") {
    const bool r_branch = kind == "numeric-R";
    auto points = parse_z(f.z);
    if (points.empty()) {
      points = r_branch ? std::vector<js::Rational>{0, js::Rational(1, 10), js::Rational(1, 5)}
                        : std::vector<js::Rational>{0, js::Rational(1, 2), 1};
    }
    if (f.n && (*f.n < 1 || *f.n > 4)) throw UsageError("--n: derivative order must be in 1..4");
    if (out != Output::Json) std::cout << "check\tn\tpoint\tstep\tformula\tfd\trel_err\n";
    bool ok = true;
    for (const auto& p : points) {
      for (unsigned n = f.n.value_or(1); n <= f.n.value_or(4); ++n) {
        const auto c = r_branch ? js::derivative_formula_check_R(n, p) : js::derivative_formula_check(n, p);
        ok = ok && c.rel_err < (n <= 2 ? 1e-6 : 1e-4);
        emit_numeric(out, r_branch ? "derivative_formula_R" : "derivative_formula", c);
      }
    }
    return ok ? 0 : 1;
  }
  throw UsageError("--kind: expected p, shape, tree, numeric or numeric-R for lambert, got '" + kind + "'");
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--output", f.output, "Output format: text, tsv or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi-Stirling polynomials: tables, positivity checks, Ramanujan and Lambert reports"};
  app.require_subcommand(1);
  Flags f;
  auto positive = CLI::PositiveNumber;

  auto* table = app.add_subcommand("table", "Print the triangle of the first or second kind");
  table->add_option("--kind", f.kind, "first or second (default second)");
  table->add_option("--n", f.n, "Largest n")->check(positive);
  add_common(table, f);

  auto* diagonal = app.add_subcommand("diagonal", "Numerator A_k, companion B_k, diagonal polynomial f_k, roots");
  diagonal->add_option("--k", f.k, "Diagonal index k")->check(positive);
  diagonal->add_option("--z", f.z, "Rational z values for root analysis (p/q)");
  add_common(diagonal, f);

  auto* check = app.add_subcommand("check", "Run one verification suite");
  check->add_option("--suite", f.suite, "Suite name or alias")->required();
  check->add_option("--z", f.z, "Rational z samples (p/q)");
  check->add_option("--n", f.n, "Depth (rows, terms)")->check(positive);
  check->add_option("--k", f.k, "Column or diagonal depth")->check(positive);
  check->add_option("--order", f.order, "Largest minor order")->check(positive);
  check->add_option("--window", f.window, "Window length")->check(positive);
  add_common(check, f);

  auto* ramanujan = app.add_subcommand("ramanujan", "Ramanujan polynomials R_n, Q_n, Q_{n,k} and defects");
  ramanujan->add_option("--kind", f.kind, "R, Q, qnk or defect");
  ramanujan->add_option("--n", f.n, "Largest n")->check(positive);
  ramanujan->add_option("--k", f.k, "Restrict k (qnk) or m (defect)");
  add_common(ramanujan, f);

  auto* lambert = app.add_subcommand("lambert", "Lambert W derivative polynomials and checks");
  lambert->add_option("--kind", f.kind, "p, shape, tree, numeric or numeric-R");
  lambert->add_option("--n", f.n, "Largest n (derivative order for numeric)")->check(positive);
  lambert->add_option("--z", f.z, "Sample points for numeric checks (p/q)");
  add_common(lambert, f);

  auto* verify = app.add_subcommand("verify-all", "Run every suite at the default scopes");
  verify->add_option("--n", f.n, "Depth override")->check(positive);
  verify->add_option("--k", f.k, "Column or diagonal depth override")->check(positive);
  verify->add_option("--order", f.order, "Minor order override")->check(positive);
  verify->add_option("--window", f.window, "Window override")->check(positive);
  add_common(verify, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*table) return cmd_table(f);
    if (*diagonal) return cmd_diagonal(f);
    if (*check) return cmd_check(f);
    if (*ramanujan) return cmd_ramanujan(f);
    if (*lambert) return cmd_lambert(f);
    if (*verify) return cmd_verify_all(f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsageError;
}
