#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "jstirling/diagonal_gf.hpp"
#include "jstirling/report_json.hpp"

using namespace jstirling;

namespace {

bool same(const CheckReport& a, const CheckReport& b) {
  if (a.check != b.check || a.verdict != b.verdict || a.scope.max_order != b.scope.max_order ||
      a.scope.window != b.scope.window || a.note != b.note || a.witness.has_value() != b.witness.has_value()) {
    return false;
  }
  if (!a.witness) return true;
  return a.witness->rows == b.witness->rows && a.witness->cols == b.witness->cols && a.witness->det == b.witness->det;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(rational_json(Rational(5)) == Json(5));
  CHECK(rational_json(Rational(-3, 4)) == Json("-3/4"));
  const Rational big(Integer("123456789012345678901234567890"));
  CHECK(rational_json(big) == Json("123456789012345678901234567890"));
  for (const Rational& q : {Rational(0), Rational(-7), Rational(22, 7), big, Rational(Integer("9223372036854775807"))}) {
    CHECK(rational_from_json(rational_json(q)) == q);
    CHECK(rational_from_json(Json::parse(rational_json(q).dump())) == q);
  }
  CHECK_THROWS(rational_from_json(Json(1.5)));
  CHECK_THROWS(rational_from_json(Json("1/0")));
}

TEST_CASE("names") {
  CHECK(verdict_name(Verdict::Certified) == "certified");
  CHECK(verdict_from_name("refuted") == Verdict::Refuted);
  CHECK(kind_from_name(kind_name(TriangleKind::FirstKind)) == TriangleKind::FirstKind);
  CHECK_THROWS(verdict_from_name("maybe"));
  CHECK_THROWS(kind_from_name("third"));
}

TEST_CASE("check reports round trip") {
  CheckReport r;
  r.check = "toeplitz_pf";
  r.verdict = Verdict::Refuted;
  r.scope = {5, 12};
  r.witness = MinorWitness{{0, 1, 2, 3, 4}, {2, 3, 4, 5, 6}, MultiPoly(-16)};
  r.note = "first violation has order 5";
  const Json j = check_report_json(r);
  CHECK(j.at("verdict") == "refuted");
  CHECK(j.at("scope").at("order") == 5);
  CHECK(j.at("scope").at("window") == 12);
  CHECK(j.at("witness").at("det") == "-16");
  CHECK(same(check_report_from_json(Json::parse(j.dump())), r));

  CheckReport ok;
  ok.check = "rows";
  ok.scope = {2, 10};
  const Json jo = check_report_json(ok);
  CHECK_FALSE(jo.contains("witness"));
  CHECK_FALSE(jo.contains("note"));
  CHECK(same(check_report_from_json(jo), ok));

  CheckReport poly = r;
  poly.witness->det = MultiPoly::parse("z^2 - 1/2*x*t");
  CHECK(same(check_report_from_json(Json::parse(check_report_json(poly).dump())), poly));
  CHECK_THROWS(check_report_from_json(Json::parse(R"({"check":"x"})")));
}

TEST_CASE("table entries round trip") {
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      for (const auto kind : {TriangleKind::FirstKind, TriangleKind::SecondKind}) {
        const TableEntry e{kind, n, k, kind == TriangleKind::SecondKind ? js_second(n, k) : js_first(n, k)};
        const TableEntry back = table_entry_from_json(Json::parse(table_entry_json(e).dump()));
        CHECK(back.kind == e.kind);
        CHECK(back.n == n);
        CHECK(back.k == k);
        CHECK(back.poly == e.poly);
      }
    }
  }
  CHECK(table_entry_json({TriangleKind::SecondKind, 4, 2, js_second(4, 2)}).dump() ==
        R"({"coeffs":[21,24,7],"k":2,"kind":"second","n":4})");
}

TEST_CASE("root and numeric reports") {
  const Json r = root_report_json(root_analysis(1, 2));
  CHECK(r.at("degree") == 2);
  CHECK(r.at("has_positive_real_root") == true);
  CHECK(r.at("rational_roots") == Json::parse("[0, 3]"));
  const NumericCheck c{2, Rational(1, 2), Rational(1, 10000), -0.5, -0.5000001, 2e-7};
  const Json jc = Json::parse(numeric_check_json(c).dump());
  CHECK(jc.at("point") == "1/2");
  CHECK(jc.at("fd").get<double>() == c.fd_value);
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::strtod(format_double(1.0 / 3.0).c_str(), nullptr) == 1.0 / 3.0);
}
