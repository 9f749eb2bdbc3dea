#include "jstirling/symfun.hpp"

namespace jstirling {

std::vector<std::vector<MultiPoly>> symmetric_table(SymKind kind, unsigned kmax,
                                                    const std::vector<MultiPoly>& args) {
  const std::size_t n = args.size();
  std::vector<std::vector<MultiPoly>> t(n + 1, std::vector<MultiPoly>(kmax + 1));
  t[0][0] = MultiPoly(1);
  for (std::size_t m = 1; m <= n; ++m) {
    const MultiPoly& xm = args[m - 1];
    t[m][0] = MultiPoly(1);
    for (unsigned k = 1; k <= kmax; ++k) {
      // Elementary uses the previous prefix, homogeneous the current one.
      const MultiPoly& lower = kind == SymKind::Elementary ? t[m - 1][k - 1] : t[m][k - 1];
      t[m][k] = t[m - 1][k];
      if (!lower.is_zero()) t[m][k] += xm * lower;
    }
  }
  return t;
}

std::vector<MultiPoly> symmetric_row(SymKind kind, unsigned kmax, const std::vector<MultiPoly>& args) {
  return symmetric_table(kind, kmax, args).back();
}

MultiPoly elementary(unsigned k, const std::vector<MultiPoly>& args) {
  if (k > args.size()) return {};
  return symmetric_row(SymKind::Elementary, k, args)[k];
}

MultiPoly homogeneous(unsigned k, const std::vector<MultiPoly>& args) {
  return symmetric_row(SymKind::Homogeneous, k, args)[k];
}

std::vector<MultiPoly> jacobi_weights(unsigned count, long shift) {
  std::vector<MultiPoly> out;
  out.reserve(count);
  const MultiPoly z = MultiPoly::var(Var::z);
  for (unsigned i = 1; i <= count; ++i) {
    const long il = static_cast<long>(i);
    out.push_back(MultiPoly(il) * (z + MultiPoly(il + shift)));
  }
  return out;
}

}  // namespace jstirling
