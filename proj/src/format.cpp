#include "flatcat/format.hpp"

#include <string>

#include "flatcat/errors.hpp"

namespace flatcat {

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "markdown") return OutputFormat::markdown;
  if (name == "svg") return OutputFormat::svg;
  throw UsageError("unknown output format '" + std::string(name) + "'");
}

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::markdown: return "markdown";
    case OutputFormat::svg: return "svg";
  }
  return "?";
}

void write_triangle(std::ostream& os, const Triangle& t, OutputFormat format) {
  const int k_min = t.kind() ? t.kind()->k_origin() : 0;
  const int k_max = t.max_k();
  switch (format) {
    case OutputFormat::csv:
      os << "n,k,count\n";
      for (int n = 1; n <= t.max_n(); ++n)
        for (int k = k_min; k <= k_max; ++k) os << n << ',' << k << ',' << t.at(n, k) << '\n';
      return;
    case OutputFormat::json: {
      os << "{\"stat\":\"" << (t.kind() ? t.kind()->name() : std::string()) << "\",\"n_min\":1"
         << ",\"k_min\":" << k_min << ",\"rows\":[";
      for (int n = 1; n <= t.max_n(); ++n) {
        os << (n > 1 ? "," : "") << '[';
        for (int k = k_min; k <= k_max; ++k) os << (k > k_min ? "," : "") << t.at(n, k);
        os << ']';
      }
      os << "]}\n";
      return;
    }
    case OutputFormat::markdown:
      os << "| n |";
      for (int k = k_min; k <= k_max; ++k) os << " k=" << k << " |";
      os << "\n|---|";
      for (int k = k_min; k <= k_max; ++k) os << "---|";
      os << '\n';
      for (int n = 1; n <= t.max_n(); ++n) {
        os << "| " << n << " |";
        for (int k = k_min; k <= k_max; ++k) os << ' ' << t.at(n, k) << " |";
        os << '\n';
      }
      return;
    case OutputFormat::text:
      for (int n = 1; n <= t.max_n(); ++n) {
        for (int k = k_min; k <= k_max; ++k) os << (k > k_min ? " " : "") << t.at(n, k);
        os << '\n';
      }
      return;
    case OutputFormat::svg:
      break;
  }
  throw UsageError("svg output is only available for render");
}

}  // namespace flatcat
