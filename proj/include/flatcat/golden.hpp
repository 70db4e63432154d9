#pragma once

#include <string_view>
#include <vector>

#include "flatcat/stats.hpp"

namespace flatcat::golden {

/// A distribution table as published: rows n = n_min, n_min+1, ... and
/// columns k = k_min, k_min+1, ...
struct Matrix {
  std::string_view id;
  StatKind kind;
  int n_min;
  int k_min;
  std::vector<std::vector<long>> rows;
};

/// A sequence as published, starting at n = n_min.
struct Sequence {
  std::string_view id;
  std::string_view description;
  int n_min;
  std::vector<long> values;
};

/// The ten published distribution tables.
const std::vector<Matrix>& matrices();

// Published sequence displays, transcribed verbatim (typos included).
const Sequence& a007051_flattened_counts();
const Sequence& a052963_two_valley_free();
const Sequence& a005183_valley_free();
const Sequence& a212337_valley_totals();
const Sequence& a055588_short_peak_free();
const Sequence& a261064_peak_totals();
const Sequence& a369328_symmetric_peak_free();
const Sequence& a290900_one_symmetric_peak();
/// The runs table read by rows (A056241), k = 1..n for n = 1..8.
const Sequence& a056241_runs_by_rows();

/// Total-occurrence listings that have no OEIS entry.
const Sequence& runs_totals();
const Sequence& wruns_totals();
const Sequence& druns_totals();
const Sequence& symv_totals();
const Sequence& symp_totals();

}  // namespace flatcat::golden
