#include "jstirling/report_json.hpp"

#include <cstdio>
#include <stdexcept>

namespace jstirling {

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && mpz_fits_slong_p(q.get_num_mpz_t())) {
    return static_cast<std::int64_t>(q.get_num().get_si());
  }
  return rational_to_string(q);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a rational string, got " + j.dump());
}

std::string verdict_name(Verdict v) { return v == Verdict::Certified ? "certified" : "refuted"; }

Verdict verdict_from_name(const std::string& s) {
  if (s == "certified") return Verdict::Certified;
  if (s == "refuted") return Verdict::Refuted;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string kind_name(TriangleKind kind) { return kind == TriangleKind::SecondKind ? "second" : "first"; }

TriangleKind kind_from_name(const std::string& s) {
  if (s == "second") return TriangleKind::SecondKind;
  if (s == "first") return TriangleKind::FirstKind;
  throw std::invalid_argument("unknown kind '" + s + "' (expected first or second)");
}

Json check_report_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["scope"] = {{"order", r.scope.max_order}, {"window", r.scope.window}};
  j["verdict"] = verdict_name(r.verdict);
  if (r.witness) {
    j["witness"] = {{"rows", r.witness->rows}, {"cols", r.witness->cols}, {"det", r.witness->det.to_string()}};
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

CheckReport check_report_from_json(const Json& j) {
  CheckReport r;
  r.check = j.at("check").get<std::string>();
  r.scope.max_order = j.at("scope").at("order").get<std::size_t>();
  r.scope.window = j.at("scope").at("window").get<std::size_t>();
  r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
  if (j.contains("witness")) {
    const Json& w = j.at("witness");
    r.witness = MinorWitness{w.at("rows").get<std::vector<std::size_t>>(), w.at("cols").get<std::vector<std::size_t>>(),
                             MultiPoly::parse(w.at("det").get<std::string>())};
  }
  if (j.contains("note")) r.note = j.at("note").get<std::string>();
  return r;
}

Json table_entry_json(const TableEntry& e) {
  Json coeffs = Json::array();
  for (const auto& c : e.poly.univariate_coefficients(Var::z)) coeffs.push_back(rational_json(c));
  if (coeffs.empty()) coeffs.push_back(0);
  return {{"kind", kind_name(e.kind)}, {"n", e.n}, {"k", e.k}, {"coeffs", coeffs}};
}

TableEntry table_entry_from_json(const Json& j) {
  TableEntry e;
  e.kind = kind_from_name(j.at("kind").get<std::string>());
  e.n = j.at("n").get<unsigned>();
  e.k = j.at("k").get<unsigned>();
  std::vector<Rational> c;
  for (const auto& v : j.at("coeffs")) c.push_back(rational_from_json(v));
  e.poly = MultiPoly::from_coefficients(Var::z, c);
  return e;
}

Json root_report_json(const RootReport& r) {
  Json roots = Json::array();
  for (const auto& iv : r.roots) {
    roots.push_back({{"lo", rational_json(iv.lo)},
                     {"hi", rational_json(iv.hi)},
                     {"exact", iv.exact},
                     {"multiplicity", iv.multiplicity}});
  }
  Json rational_roots = Json::array();
  for (const auto& q : r.rational_roots) rational_roots.push_back(rational_json(q));
  return {{"poly", MultiPoly::from_coefficients(Var::x, r.poly.coeffs()).to_string()},
          {"degree", r.degree},
          {"real_root_count", r.real_root_count},
          {"distinct_real_root_count", r.distinct_real_root_count},
          {"nonpositive_real_root_count", r.nonpositive_real_root_count},
          {"positive_real_root_count", r.positive_real_root_count},
          {"all_real", r.all_real()},
          {"all_real_nonpositive", r.all_real_nonpositive()},
          {"distinct", r.distinct},
          {"has_positive_real_root", r.has_positive_real_root},
          {"roots", roots},
          {"rational_roots", rational_roots}};
}

Json numeric_check_json(const NumericCheck& c) {
  return {{"n", c.n},
          {"point", rational_json(c.point)},
          {"step", rational_json(c.step)},
          {"formula", c.formula_value},
          {"fd", c.fd_value},
          {"rel_err", c.rel_err}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace jstirling
