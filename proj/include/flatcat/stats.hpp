#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatcat/bigint.hpp"
#include "flatcat/word.hpp"

namespace flatcat {

enum class Stat { runs, wruns, druns, wdruns, ell_val, val, symv, ell_peak, peak, symp };

/// A statistic, with ell set (>= 1) for the ell-indexed families.
struct StatKind {
  Stat stat = Stat::runs;
  int ell = 0;

  static StatKind runs() { return {Stat::runs}; }
  static StatKind wruns() { return {Stat::wruns}; }
  static StatKind druns() { return {Stat::druns}; }
  static StatKind wdruns() { return {Stat::wdruns}; }
  static StatKind ell_val(int ell) { return {Stat::ell_val, ell}; }
  static StatKind val() { return {Stat::val}; }
  static StatKind symv() { return {Stat::symv}; }
  static StatKind ell_peak(int ell) { return {Stat::ell_peak, ell}; }
  static StatKind peak() { return {Stat::peak}; }
  static StatKind symp() { return {Stat::symp}; }

  /// Parses a statistic name ("runs", "ell_val", ...). Throws UsageError for
  /// unknown names, for a missing ell on an indexed kind, and for an ell on a
  /// kind that takes none.
  static StatKind parse(std::string_view name, std::optional<int> ell = std::nullopt);

  bool indexed() const { return stat == Stat::ell_val || stat == Stat::ell_peak; }
  /// Smallest statistic value: 1 for the run families, 0 otherwise.
  int k_origin() const;
  /// "runs", "ell_val(2)", ...
  std::string name() const;
  /// Throws UsageError when ell is missing or out of place.
  void require_valid() const;

  bool operator==(const StatKind&) const = default;
};

std::string_view stat_name(Stat s);

/// The fourteen kinds the cross-validation harness covers by default: every
/// family, with ell in {1, 2, 3} for the indexed ones.
std::vector<StatKind> default_stat_kinds();

/// Exact occurrence count of the statistic in w.
///
/// Valleys and peaks are counted per maximal plateau: an ell-valley
/// a b^ell (b+1) needs the whole run of b's to have length ell, so a plateau
/// contributes to exactly one ell.
unsigned statistic(const Word& w, StatKind kind);

/// Letter ranges of each occurrence: whole runs for the run families, the
/// factor a b^ell (b+1) or a (a+1)^ell b for valleys and peaks.
std::vector<LetterRange> occurrences(const Word& w, StatKind kind);

struct Distribution {
  int n = 0;
  StatKind kind;
  std::map<int, BigInt> counts;

  BigInt row_sum() const;
  /// Sum of k * counts[k].
  BigInt total() const;
  BigInt at(int k) const;
};

/// Counts by exhaustive enumeration of Flat(C_n).
Distribution distribution(int n, StatKind kind, int cap = kDefaultExhaustiveCap);

/// Several distributions from a single enumeration pass.
std::vector<Distribution> distributions(int n, std::span<const StatKind> kinds,
                                        int cap = kDefaultExhaustiveCap);

BigInt total(int n, StatKind kind, int cap = kDefaultExhaustiveCap);

}  // namespace flatcat
