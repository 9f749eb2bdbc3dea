#pragma once

#include <vector>

#include "jstirling/poly.hpp"

namespace jstirling {

enum class SymKind { Elementary, Homogeneous };

/// e_k(args) by the prefix recurrence e_k(n) = e_k(n-1) + x_n e_{k-1}(n-1).
MultiPoly elementary(unsigned k, const std::vector<MultiPoly>& args);

/// h_k(args) by the prefix recurrence h_k(n) = h_k(n-1) + x_n h_{k-1}(n).
MultiPoly homogeneous(unsigned k, const std::vector<MultiPoly>& args);

/// All of e_0..e_kmax (or h_0..h_kmax) of the full argument list in one pass.
std::vector<MultiPoly> symmetric_row(SymKind kind, unsigned kmax, const std::vector<MultiPoly>& args);

/// Table T[m][k] = e_k or h_k of the first m arguments, 0 <= m <= |args|, 0 <= k <= kmax.
std::vector<std::vector<MultiPoly>> symmetric_table(SymKind kind, unsigned kmax,
                                                    const std::vector<MultiPoly>& args);

/// The arguments i(i + z + shift) for i = 1..count (shift = -1 gives i(i-1+z)).
std::vector<MultiPoly> jacobi_weights(unsigned count, long shift = 0);

}  // namespace jstirling
