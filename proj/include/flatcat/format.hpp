#pragma once

#include <ostream>
#include <string_view>

#include "flatcat/series.hpp"

namespace flatcat {

enum class OutputFormat { text, csv, json, markdown, svg };

OutputFormat parse_output_format(std::string_view name);
std::string_view format_name(OutputFormat f);

/// Rows n = 1..max_n, columns k = k_origin..max_k where k_origin comes from
/// the triangle's kind (0 when untagged). Row-major and deterministic.
///
///   csv       header "n,k,count", one line per cell
///   json      {"stat":..., "n_min":1, "k_min":..., "rows":[[...],...]};
///             counts are bare JSON integers of arbitrary size
///   markdown  table with one column per k
///   text      space-separated rows
///
/// svg is rejected with UsageError.
void write_triangle(std::ostream& os, const Triangle& t, OutputFormat format);

}  // namespace flatcat
