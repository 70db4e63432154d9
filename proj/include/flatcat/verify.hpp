#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatcat/bigint.hpp"
#include "flatcat/stats.hpp"

namespace flatcat {

struct Counterexample {
  int n = 0;
  std::optional<int> k;
  std::string expected;
  std::string got;
  bool operator==(const Counterexample&) const = default;
};

struct Check {
  std::string id;
  std::string scope;
  bool passed = true;
  std::optional<Counterexample> counterexample;  // set whenever !passed
};

/// A discrepancy in the published material that the checks confirmed.
struct Erratum {
  std::string id;
  std::string location;
  std::string printed;
  std::string corrected;
  std::string evidence;
};

struct CheckReport {
  std::vector<Check> checks;
  std::vector<Erratum> errata;

  /// True when every check passed.
  bool green() const;
  const Check* find(std::string_view id) const;
  /// Appends other's checks; errata are kept once per id.
  void merge(CheckReport other);
  /// Orders checks and errata by id.
  void finalize();

  std::string to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  int triangle_max_n = 12;
  int totals_max_n = 14;
  int bijection_max_n = 10;
  int cap = kDefaultExhaustiveCap;
  std::vector<StatKind> kinds = default_stat_kinds();
};

/// Enumeration vs. series triangle for n <= max_n, per-cell closed forms,
/// row sums against f(n), and triangle totals vs. the univariate total series
/// vs. closed-form totals for n <= totals_max_n. For ell_val kinds this also
/// audits the printed ell-valley total formula.
CheckReport cross_check(StatKind kind, int max_n, int totals_max_n, int cap = kDefaultExhaustiveCap);
CheckReport cross_check(StatKind kind, int max_n);

/// Published sequence prefixes (OEIS entries and total listings) against the
/// computed values.
CheckReport oeis_check();

/// The ten published distribution tables against series expansion.
CheckReport golden_check();

/// Exhaustive audits of the four bijections up to max_n.
CheckReport bijection_check(int max_n);

/// Word-level identities between statistics over every word with n <= max_n,
/// and the Fibonacci identity for p_1(n, 0).
CheckReport identity_check(int max_n, int cap = kDefaultExhaustiveCap);

CheckReport full_report(const VerifyOptions& options = {});

/// The ell-valley total formula exactly as published:
/// (1 - 3^(n-2-ell) + 2 * 3^(n-2*ell) * (n-2-ell)) / 4.
BigRational printed_ell_valley_total(int ell, int n);

}  // namespace flatcat
