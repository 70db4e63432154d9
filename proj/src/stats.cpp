#include "flatcat/stats.hpp"

#include <array>
#include <cstdint>

#include "flatcat/errors.hpp"

namespace flatcat {

namespace {

constexpr std::array<std::pair<Stat, std::string_view>, 10> kNames{{
    {Stat::runs, "runs"},
    {Stat::wruns, "wruns"},
    {Stat::druns, "druns"},
    {Stat::wdruns, "wdruns"},
    {Stat::ell_val, "ell_val"},
    {Stat::val, "val"},
    {Stat::symv, "symv"},
    {Stat::ell_peak, "ell_peak"},
    {Stat::peak, "peak"},
    {Stat::symp, "symp"},
}};

bool is_run_family(Stat s) {
  return s == Stat::runs || s == Stat::wruns || s == Stat::druns || s == Stat::wdruns;
}

// True when a run of this family ends between letters a and b.
bool run_breaks(Stat s, Letter a, Letter b) {
  switch (s) {
    case Stat::runs: return a >= b;
    case Stat::wruns: return a > b;
    case Stat::druns: return a <= b;
    case Stat::wdruns: return a < b;
    default: return false;
  }
}

// Whether the maximal plateau [first, last] of letter b, strictly inside the
// word, is an occurrence of the valley/peak statistic.
bool plateau_matches(StatKind kind, Letter before, Letter b, Letter after, std::size_t length) {
  const bool valley = before > b && after == b + 1;
  const bool peak = before == b - 1 && after < b;
  switch (kind.stat) {
    case Stat::ell_val: return valley && length == static_cast<std::size_t>(kind.ell);
    case Stat::val: return valley;
    case Stat::symv: return valley && before == after;
    case Stat::ell_peak: return peak && length == static_cast<std::size_t>(kind.ell);
    case Stat::peak: return peak;
    case Stat::symp: return peak && before == after;
    default: return false;
  }
}

template <class Visit>
void for_each_occurrence(const Word& w, StatKind kind, Visit&& visit) {
  const std::size_t n = w.size();
  if (n == 0) return;
  if (is_run_family(kind.stat)) {
    std::size_t start = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (run_breaks(kind.stat, w[i - 1], w[i])) {
        visit(LetterRange{start, i - 1});
        start = i;
      }
    }
    visit(LetterRange{start, n - 1});
    return;
  }
  std::size_t s = 1;
  while (s + 1 < n) {
    std::size_t e = s;
    while (e + 1 < n && w[e + 1] == w[s]) ++e;
    if (e + 1 < n && w[s - 1] != w[s] &&
        plateau_matches(kind, w[s - 1], w[s], w[e + 1], e - s + 1))
      visit(LetterRange{s - 1, e + 1});
    s = e + 1;
  }
}

}  // namespace

std::string_view stat_name(Stat s) {
  for (const auto& [stat, name] : kNames)
    if (stat == s) return name;
  throw ContractViolation("stat_name: unknown statistic");
}

StatKind StatKind::parse(std::string_view name, std::optional<int> ell) {
  for (const auto& [stat, label] : kNames) {
    if (label != name) continue;
    StatKind kind{stat, ell.value_or(0)};
    if (!kind.indexed() && ell)
      throw UsageError("statistic '" + std::string(name) + "' takes no ell parameter");
    kind.require_valid();
    return kind;
  }
  throw UsageError("unknown statistic '" + std::string(name) + "'");
}

int StatKind::k_origin() const { return is_run_family(stat) ? 1 : 0; }

std::string StatKind::name() const {
  std::string out(stat_name(stat));
  if (indexed()) out += "(" + std::to_string(ell) + ")";
  return out;
}

void StatKind::require_valid() const {
  if (indexed() && ell < 1)
    throw UsageError("statistic '" + std::string(stat_name(stat)) +
                     "' requires a positive ell parameter");
  if (!indexed() && ell != 0)
    throw UsageError("statistic '" + std::string(stat_name(stat)) + "' takes no ell parameter");
}

std::vector<StatKind> default_stat_kinds() {
  std::vector<StatKind> kinds{StatKind::runs(), StatKind::wruns(), StatKind::druns(),
                              StatKind::wdruns()};
  for (int ell = 1; ell <= 3; ++ell) kinds.push_back(StatKind::ell_val(ell));
  kinds.push_back(StatKind::val());
  kinds.push_back(StatKind::symv());
  for (int ell = 1; ell <= 3; ++ell) kinds.push_back(StatKind::ell_peak(ell));
  kinds.push_back(StatKind::peak());
  kinds.push_back(StatKind::symp());
  return kinds;
}

unsigned statistic(const Word& w, StatKind kind) {
  kind.require_valid();
  unsigned count = 0;
  for_each_occurrence(w, kind, [&](LetterRange) { ++count; });
  return count;
}

std::vector<LetterRange> occurrences(const Word& w, StatKind kind) {
  kind.require_valid();
  std::vector<LetterRange> out;
  for_each_occurrence(w, kind, [&](LetterRange r) { out.push_back(r); });
  return out;
}

BigInt Distribution::row_sum() const {
  BigInt sum = 0;
  for (const auto& [k, c] : counts) sum += c;
  return sum;
}

BigInt Distribution::total() const {
  BigInt sum = 0;
  for (const auto& [k, c] : counts) sum += c * k;
  return sum;
}

BigInt Distribution::at(int k) const {
  auto it = counts.find(k);
  return it == counts.end() ? BigInt(0) : it->second;
}

std::vector<Distribution> distributions(int n, std::span<const StatKind> kinds, int cap) {
  for (const StatKind& kind : kinds) kind.require_valid();
  // Every statistic is at most n + 1, so a flat tally per kind suffices.
  const std::size_t width = static_cast<std::size_t>(std::max(n, 0)) + 2;
  std::vector<std::vector<std::uint64_t>> tally(kinds.size(),
                                                std::vector<std::uint64_t>(width, 0));
  for (const Word& w : enumerate_flattened(n, cap)) {
    for (std::size_t i = 0; i < kinds.size(); ++i) ++tally[i][statistic(w, kinds[i])];
  }
  std::vector<Distribution> out;
  out.reserve(kinds.size());
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    Distribution d{n, kinds[i], {}};
    for (std::size_t k = 0; k < width; ++k) {
      if (tally[i][k] == 0) continue;
      BigInt c;
      mpz_set_ui(c.get_mpz_t(), tally[i][k]);
      d.counts.emplace(static_cast<int>(k), c);
    }
    out.push_back(std::move(d));
  }
  return out;
}

Distribution distribution(int n, StatKind kind, int cap) {
  return std::move(distributions(n, std::span(&kind, 1), cap).front());
}

BigInt total(int n, StatKind kind, int cap) { return distribution(n, kind, cap).total(); }

}  // namespace flatcat
