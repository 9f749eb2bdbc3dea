#pragma once

// JSON forms of the reports produced by the library.
//
//   check report  {check, scope:{order,window}, verdict, witness?:{rows,cols,det}, note?}
//   table entry   {kind, n, k, coeffs:[c0,c1,...]}   coefficients ascending in z
//   root report   {poly, degree, real_root_count, ..., roots:[{lo,hi,exact,multiplicity}]}
//   numeric check {n, point, step, formula, fd, rel_err}
//
// Integer coefficients that fit in 64 bits are JSON numbers; larger ones and
// non-integral rationals are strings ("123...", "p/q"). Polynomials are
// strings in canonical text form.

#include <string>

#include "json.hpp"

#include "jstirling/jacobi_stirling.hpp"
#include "jstirling/lambert.hpp"
#include "jstirling/positivity.hpp"
#include "jstirling/roots.hpp"

namespace jstirling {

using Json = nlohmann::json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& s);

std::string kind_name(TriangleKind kind);
TriangleKind kind_from_name(const std::string& s);

Json check_report_json(const CheckReport& r);
CheckReport check_report_from_json(const Json& j);

struct TableEntry {
  TriangleKind kind = TriangleKind::SecondKind;
  unsigned n = 0;
  unsigned k = 0;
  MultiPoly poly;  // in z
};

Json table_entry_json(const TableEntry& e);
TableEntry table_entry_from_json(const Json& j);

Json root_report_json(const RootReport& r);
Json numeric_check_json(const NumericCheck& c);

/// Fixed 17-significant-digit rendering used in text and TSV output.
std::string format_double(double v);

}  // namespace jstirling
