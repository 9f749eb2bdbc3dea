#pragma once

// Named verification suites. Each suite produces a list of check reports;
// boolean identities are reported as checks without a witness.

#include <optional>
#include <string>
#include <vector>

#include "jstirling/positivity.hpp"

namespace jstirling {

struct SuiteOptions {
  std::vector<Rational> z_samples;  // empty: suite default
  std::optional<unsigned> n;        // depth (rows, terms)
  std::optional<unsigned> k;        // column / diagonal depth
  std::optional<std::size_t> order;
  std::optional<std::size_t> window;
  unsigned threads = 0;
};

struct SuiteItem {
  CheckReport report;
  /// Refutations of informational items never fail a run.
  bool informational = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteItem> items;
  bool ok() const;
};

/// Canonical suite names in verify-all order.
const std::vector<std::string>& suite_names();

/// Canonical name for a suite name or alias; nullopt if unknown.
std::optional<std::string> resolve_suite(const std::string& name);

/// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

/// All suites at their default scopes (overridable through opts).
std::vector<SuiteResult> verify_all(const SuiteOptions& opts = {});

// Individual checks shared by the suites and the tests.

/// Root analysis of A_k(x;z0): all real, nonpositive, and for -1 < z0 < 1
/// distinct of full degree 2k.
CheckReport diagonal_root_check(unsigned k, const Rational& z0);

/// {JS(k+n,n;z0)}_{n=0..window} as a Toeplitz PF check. When the
/// sequence is not PF and no witness shows at `order` within `window`, the
/// window is enlarged up to `max_window`, then the order up to `max_order`.
CheckReport diagonal_pf_check(unsigned k, const Rational& z0, std::size_t order, std::size_t window,
                              std::size_t max_window, std::size_t max_order, unsigned threads = 0);

/// Sequence {JS(k+n,n;z0)}_{n=0..last} as rationals.
std::vector<Rational> diagonal_values(unsigned k, const Rational& z0, unsigned last);

}  // namespace jstirling
