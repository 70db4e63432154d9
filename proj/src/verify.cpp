#include "flatcat/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "flatcat/bijections.hpp"
#include "flatcat/golden.hpp"
#include "flatcat/series.hpp"
#include "flatcat/word.hpp"

namespace flatcat {

// --- report -------------------------------------------------------------------

bool CheckReport::green() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* CheckReport::find(std::string_view id) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.id == id; });
  return it == checks.end() ? nullptr : &*it;
}

void CheckReport::merge(CheckReport other) {
  for (Check& c : other.checks) checks.push_back(std::move(c));
  for (Erratum& e : other.errata) {
    const bool known = std::any_of(errata.begin(), errata.end(),
                                   [&](const Erratum& mine) { return mine.id == e.id; });
    if (!known) errata.push_back(std::move(e));
  }
}

void CheckReport::finalize() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.id < b.id; });
  std::stable_sort(errata.begin(), errata.end(),
                   [](const Erratum& a, const Erratum& b) { return a.id < b.id; });
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["green"] = green();
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json entry{{"id", c.id}, {"scope", c.scope}, {"passed", c.passed}};
    if (c.counterexample) {
      const Counterexample& x = *c.counterexample;
      entry["counterexample"] = {{"n", x.n},
                                 {"k", x.k ? nlohmann::ordered_json(*x.k) : nullptr},
                                 {"expected", x.expected},
                                 {"got", x.got}};
    } else {
      entry["counterexample"] = nullptr;
    }
    j["checks"].push_back(std::move(entry));
  }
  j["errata"] = nlohmann::ordered_json::array();
  for (const Erratum& e : errata) {
    j["errata"].push_back({{"id", e.id},
                           {"location", e.location},
                           {"printed", e.printed},
                           {"corrected", e.corrected},
                           {"evidence", e.evidence}});
  }
  return j.dump(2) + "\n";
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const Check& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.id << " : " << c.scope << '\n';
    if (c.counterexample) {
      const Counterexample& x = *c.counterexample;
      os << "     at n=" << x.n;
      if (x.k) os << ", k=" << *x.k;
      os << ": expected " << x.expected << ", got " << x.got << '\n';
    }
    if (!c.passed) ++failed;
  }
  os << checks.size() - failed << '/' << checks.size() << " checks passed\n";
  os << "errata: " << errata.size() << '\n';
  for (const Erratum& e : errata) {
    os << "  " << e.id << " (" << e.location << ")\n"
       << "    printed:   " << e.printed << '\n'
       << "    corrected: " << e.corrected << '\n'
       << "    evidence:  " << e.evidence << '\n';
  }
  return os.str();
}

// --- helpers --------------------------------------------------------------------

namespace {

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const BigRational& v) { return v.get_str(); }
std::string str(bool v) { return v ? "true" : "false"; }
template <class T>
  requires std::is_arithmetic_v<T>
std::string str(T v) {
  return std::to_string(v);
}
std::string str(const std::string& v) { return v; }

// Collects one check, keeping the first mismatch as its counterexample.
class Recorder {
 public:
  Recorder(std::string id, std::string scope) : check_{std::move(id), std::move(scope), true, {}} {}

  template <class A, class B>
  bool equal(int n, std::optional<int> k, const A& expected, const B& got) {
    if (expected == got) return true;
    fail(n, k, str(expected), str(got));
    return false;
  }

  void fail(int n, std::optional<int> k, std::string expected, std::string got) {
    if (!check_.passed) return;
    check_.passed = false;
    check_.counterexample = Counterexample{n, k, std::move(expected), std::move(got)};
  }

  bool ok() const { return check_.passed; }
  Check finish() { return std::move(check_); }

 private:
  Check check_;
};

BigInt big(long v) { return BigInt(v); }

}  // namespace

BigRational printed_ell_valley_total(int ell, int n) {
  BigRational v = 1 - rational_power(3, n - 2 - ell) +
                  2 * rational_power(3, n - 2 * ell) * BigRational(n - 2 - ell);
  v /= 4;
  v.canonicalize();
  return v;
}

// --- cross check --------------------------------------------------------------------

namespace {

// The printed ell-valley total against the generating-function totals. Yields
// an erratum only when the printed form disagrees somewhere and the corrected
// closed form agrees everywhere in scope.
std::optional<Erratum> audit_ell_valley_total(std::set<int> ells, int max_n) {
  std::optional<std::string> first_disagreement;
  bool corrected_ok = true;
  for (int ell : ells) {
    const StatKind kind = StatKind::ell_val(ell);
    const std::vector<BigInt> totals = total_sequence(kind, max_n);
    for (int n = closed_form_total_first_n(kind); n <= max_n; ++n) {
      const BigInt& reference = totals[static_cast<std::size_t>(n)];
      if (closed_form_total(kind, n) != reference) corrected_ok = false;
      const BigRational printed = printed_ell_valley_total(ell, n);
      if (printed != BigRational(reference) && !first_disagreement) {
        first_disagreement = "ell=" + std::to_string(ell) + ", n=" + std::to_string(n) +
                             ": printed " + str(printed) + ", generating function " +
                             str(reference);
      }
    }
  }
  if (!first_disagreement || !corrected_ok) return std::nullopt;
  std::string scope = "ell in {";
  bool first = true;
  for (int ell : ells) {
    scope += (first ? "" : ",") + std::to_string(ell);
    first = false;
  }
  scope += "}, n <= " + std::to_string(max_n);
  return Erratum{
      "ell-valley-total-exponent",
      "closed form for v_ell(n), the total number of ell-valleys",
      "(1 - 3^(n-2-ell) + 2*3^(n-2*ell)*(n-2-ell))/4",
      "(1 + 3^(n-ell-2)*(2n-2*ell-5))/4",
      *first_disagreement + "; corrected form matches the total generating function x^(ell+3)/"
                            "((1-x)(1-3x)^2) for " + scope};
}

}  // namespace

CheckReport cross_check(StatKind kind, int max_n, int totals_max_n, int cap) {
  kind.require_valid();
  const std::string name = kind.name();
  const int max_k = std::max(max_n, totals_max_n) + 1;
  const Triangle tri = expand(kind, std::max(max_n, totals_max_n), max_k);
  CheckReport report;

  {
    Recorder r("cross." + name + ".enumeration-vs-series",
               "exhaustive distribution equals [x^n y^k] of the generating function, n <= " +
                   std::to_string(max_n));
    for (int n = 1; n <= max_n && r.ok(); ++n) {
      const Distribution d = distribution(n, kind, cap);
      for (int k = 0; k <= max_k; ++k)
        if (!r.equal(n, k, d.at(k), tri.at(n, k))) break;
    }
    report.checks.push_back(r.finish());
  }
  {
    Recorder r("cross." + name + ".row-sums",
               "series row sums equal (3^(n-1)+1)/2, n <= " + std::to_string(totals_max_n));
    for (int n = 1; n <= totals_max_n; ++n)
      if (!r.equal(n, std::nullopt, count_flattened(n), tri.row_sum(n))) break;
    report.checks.push_back(r.finish());
  }
  if (closed_form_count(kind, 1, kind.k_origin())) {
    Recorder r("cross." + name + ".closed-form-cells",
               "per-cell closed form equals the series triangle, n <= " + std::to_string(max_n));
    for (int n = 1; n <= max_n && r.ok(); ++n) {
      for (int k = 0; k <= n + 1; ++k) {
        const std::optional<BigInt> v = closed_form_count(kind, n, k);
        if (v && !r.equal(n, k, tri.at(n, k), *v)) break;
      }
    }
    report.checks.push_back(r.finish());
  }
  {
    Recorder r("cross." + name + ".totals",
               "triangle totals, total series, and closed-form totals agree, n <= " +
                   std::to_string(totals_max_n));
    const std::vector<BigInt> series_totals = total_sequence(kind, totals_max_n);
    for (int n = 1; n <= totals_max_n; ++n) {
      const BigInt from_triangle = tri.row_total(n);
      if (!r.equal(n, std::nullopt, from_triangle, series_totals[static_cast<std::size_t>(n)]))
        break;
      if (!r.equal(n, std::nullopt, from_triangle, closed_form_total(kind, n))) break;
    }
    report.checks.push_back(r.finish());
  }
  if (kind.stat == Stat::ell_val) {
    if (auto e = audit_ell_valley_total({1, 2, 3, kind.ell}, std::max(totals_max_n, kind.ell + 4)))
      report.errata.push_back(std::move(*e));
  }
  return report;
}

CheckReport cross_check(StatKind kind, int max_n) { return cross_check(kind, max_n, max_n); }

// --- published sequences ----------------------------------------------------------------

namespace {

// Compares a published listing with computed values for the same n. A listing
// that matches once a single repeated entry is dropped passes and yields an
// erratum for the repetition.
void compare_listing(CheckReport& report, const golden::Sequence& seq, std::string check_id,
                     const std::function<BigInt(int)>& computed) {
  const std::size_t len = seq.values.size();
  std::vector<BigInt> want;
  for (std::size_t i = 0; i < len; ++i) want.push_back(computed(seq.n_min + static_cast<int>(i)));

  auto first_mismatch = [&](const std::vector<long>& printed) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < printed.size(); ++i)
      if (want[i] != printed[i]) return i;
    return std::nullopt;
  };

  Recorder r(std::move(check_id), std::string(seq.id) + ": " + std::string(seq.description) +
                                      ", n >= " + std::to_string(seq.n_min));
  const std::optional<std::size_t> miss = first_mismatch(seq.values);
  if (!miss) {
    report.checks.push_back(r.finish());
    return;
  }
  for (std::size_t i = 1; i < len; ++i) {
    if (seq.values[i] != seq.values[i - 1]) continue;
    std::vector<long> dropped(seq.values);
    dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(i));
    if (first_mismatch(dropped)) continue;
    const int n_dup = seq.n_min + static_cast<int>(i);
    std::string printed, corrected;
    for (std::size_t j = 0; j < len; ++j) {
      printed += (j ? ", " : "") + std::to_string(seq.values[j]);
      corrected += (j ? ", " : "") + want[j].get_str();
    }
    report.checks.push_back(r.finish());
    report.errata.push_back(Erratum{
        std::string(seq.id) + "-duplicated-term",
        "listing of " + std::string(seq.description),
        printed,
        corrected,
        "entry for n=" + std::to_string(n_dup) + " repeats " +
            std::to_string(seq.values[i]) + "; the computed value is " +
            want[i].get_str() + " and the remaining entries are shifted by one"});
    return;
  }
  const int n = seq.n_min + static_cast<int>(*miss);
  r.fail(n, std::nullopt, std::to_string(seq.values[*miss]), want[*miss].get_str());
  report.checks.push_back(r.finish());
}

std::function<BigInt(int)> column(StatKind kind, int k, int max_n) {
  auto tri = std::make_shared<Triangle>(expand(kind, max_n, max_n + 1));
  return [tri, k](int n) { return tri->at(n, k); };
}

std::function<BigInt(int)> totals(StatKind kind, int max_n) {
  auto seq = std::make_shared<std::vector<BigInt>>(total_sequence(kind, max_n));
  return [seq](int n) { return (*seq)[static_cast<std::size_t>(n)]; };
}

}  // namespace

CheckReport oeis_check() {
  CheckReport report;
  const int max_n = 16;

  compare_listing(report, golden::a007051_flattened_counts(), "oeis.A007051", [](int n) {
    BigInt count = 0;
    for ([[maybe_unused]] const Word& w : enumerate_flattened(n)) ++count;
    return count;
  });
  {
    // Rows of the runs table flattened into one sequence.
    const Triangle runs = expand(StatKind::runs(), 8, 9);
    std::vector<BigInt> by_rows;
    for (int n = 1; n <= 8; ++n)
      for (int k = 1; k <= n; ++k) by_rows.push_back(runs.at(n, k));
    compare_listing(report, golden::a056241_runs_by_rows(), "oeis.A056241",
                    [by_rows](int i) { return by_rows[static_cast<std::size_t>(i - 1)]; });
  }
  compare_listing(report, golden::a052963_two_valley_free(), "oeis.A052963",
                  column(StatKind::ell_val(2), 0, max_n));
  compare_listing(report, golden::a005183_valley_free(), "oeis.A005183",
                  column(StatKind::val(), 0, max_n));
  compare_listing(report, golden::a212337_valley_totals(), "oeis.A212337",
                  totals(StatKind::val(), max_n));
  compare_listing(report, golden::a055588_short_peak_free(), "oeis.A055588",
                  column(StatKind::ell_peak(1), 0, max_n));
  compare_listing(report, golden::a261064_peak_totals(), "oeis.A261064",
                  totals(StatKind::peak(), max_n));
  compare_listing(report, golden::a369328_symmetric_peak_free(), "oeis.A369328",
                  column(StatKind::symp(), 0, max_n));
  compare_listing(report, golden::a290900_one_symmetric_peak(), "oeis.A290900",
                  column(StatKind::symp(), 1, max_n));

  compare_listing(report, golden::runs_totals(), "listing.runs-totals",
                  totals(StatKind::runs(), max_n));
  compare_listing(report, golden::wruns_totals(), "listing.wruns-totals",
                  totals(StatKind::wruns(), max_n));
  compare_listing(report, golden::druns_totals(), "listing.druns-totals",
                  totals(StatKind::druns(), max_n));
  compare_listing(report, golden::symv_totals(), "listing.symv-totals",
                  totals(StatKind::symv(), max_n));
  compare_listing(report, golden::symp_totals(), "listing.symp-totals",
                  totals(StatKind::symp(), max_n));
  return report;
}

CheckReport golden_check() {
  CheckReport report;
  for (const golden::Matrix& m : golden::matrices()) {
    const int last_n = m.n_min + static_cast<int>(m.rows.size()) - 1;
    const int last_k = m.k_min + static_cast<int>(m.rows.front().size()) - 1;
    Recorder r("golden." + std::string(m.id),
               "published " + m.kind.name() + " table, n = " + std::to_string(m.n_min) + ".." +
                   std::to_string(last_n) + ", k = " + std::to_string(m.k_min) + ".." +
                   std::to_string(last_k));
    const Triangle t = expand(m.kind, last_n, last_k);
    for (std::size_t i = 0; i < m.rows.size() && r.ok(); ++i) {
      for (std::size_t j = 0; j < m.rows[i].size(); ++j) {
        const int n = m.n_min + static_cast<int>(i);
        const int k = m.k_min + static_cast<int>(j);
        if (!r.equal(n, k, big(m.rows[i][j]), t.at(n, k))) break;
      }
    }
    report.checks.push_back(r.finish());
  }
  return report;
}

// --- bijections ------------------------------------------------------------------

CheckReport bijection_check(int max_n) {
  CheckReport report;
  {
    Recorder r("bijection.psi-composition",
               "psi maps Flat(C_n) onto even-sum {0,1,2}-compositions of length n-1 and its "
               "backtracking inverse finds exactly one parse, n <= " + std::to_string(max_n));
    for (int n = 1; n <= max_n && r.ok(); ++n) {
      std::set<Composition> image;
      for (const Word& w : enumerate_flattened(n)) {
        const Composition c = psi_composition(w);
        if (!r.equal(n, std::nullopt, static_cast<std::size_t>(n - 1), c.parts.size())) break;
        if (!r.equal(n, std::nullopt, 0, c.sum() % 2)) break;
        if (!r.equal(n, std::nullopt, std::size_t{1}, psi_composition_parse_count(c))) break;
        if (!r.equal(n, std::nullopt, w.to_string(), psi_composition_inverse(c).to_string())) break;
        image.insert(c);
      }
      const std::vector<Composition> all = even_compositions(n - 1);
      if (!r.equal(n, std::nullopt, all.size(), image.size())) break;
      r.equal(n, std::nullopt, true, std::equal(all.begin(), all.end(), image.begin()));
    }
    report.checks.push_back(r.finish());
  }
  {
    Recorder r("bijection.psi-ocp",
               "psi_ocp is injective into order-consecutive partitions with runs(w) blocks, "
               "n <= " + std::to_string(max_n));
    const Word example = Word::parse("0,1,1,2,0,1,2,0");
    r.equal(8, std::nullopt, std::string("{1,2}{6}{4,5,7}{3,8}"), psi_ocp(example).to_string());
    for (int n = 1; n <= max_n && r.ok(); ++n) {
      std::set<OrderConsecutivePartition> image;
      std::size_t words = 0;
      for (const Word& w : enumerate_flattened(n)) {
        const OrderConsecutivePartition p = psi_ocp(w);
        if (!r.equal(n, std::nullopt, true, p.is_valid(n))) break;
        if (!r.equal(n, std::nullopt, static_cast<std::size_t>(statistic(w, StatKind::runs())),
                     p.blocks.size()))
          break;
        image.insert(p);
        ++words;
      }
      r.equal(n, std::nullopt, words, image.size());
    }
    report.checks.push_back(r.finish());
  }
  {
    Recorder r("bijection.f-dotted",
               "f maps dotted binary words of length n-1 with 2k-2 dots injectively to "
               "flattened words with k weak runs, n <= " + std::to_string(max_n));
    const DottedBinaryWord example =
        DottedBinaryWord::parse("10100.1010.0110.01.0110.0.00");
    r.equal(29, 4, std::string("01122234455223445564456677666"),
            f_dotted(example).to_compact_string());
    for (int n = 1; n <= max_n && r.ok(); ++n) {
      std::set<Word> image;
      for (int k = 1; 2 * k - 2 <= n - 1 && r.ok(); ++k) {
        const std::vector<DottedBinaryWord> inputs = dotted_words(n - 1, 2 * k - 2);
        if (!r.equal(n, k, *closed_form_count(StatKind::wruns(), n, k), big(static_cast<long>(inputs.size()))))
          break;
        for (const DottedBinaryWord& u : inputs) {
          const Word w = f_dotted(u);
          if (!r.equal(n, k, static_cast<std::size_t>(n), w.size())) break;
          if (!r.equal(n, k, true, validate_flattened(w))) break;
          if (!r.equal(n, k, static_cast<unsigned>(k), statistic(w, StatKind::wruns()))) break;
          image.insert(w);
        }
      }
      if (r.ok()) r.equal(n, std::nullopt, count_flattened(n), big(static_cast<long>(image.size())));
    }
    report.checks.push_back(r.finish());
  }
  {
    Recorder r("bijection.phi",
               "phi is a length-preserving involution on Flat(C_n) with wdruns(phi(w)) = "
               "runs(w), n <= " + std::to_string(max_n));
    for (int n = 1; n <= max_n && r.ok(); ++n) {
      for (const Word& w : enumerate_flattened(n)) {
        const Word image = phi(w);
        if (!r.equal(n, std::nullopt, true, image.size() == w.size() && validate_flattened(image)))
          break;
        if (!r.equal(n, std::nullopt, w.to_string(), phi(image).to_string())) break;
        if (!r.equal(n, std::nullopt, statistic(w, StatKind::runs()),
                     statistic(image, StatKind::wdruns())))
          break;
      }
    }
    report.checks.push_back(r.finish());
  }
  return report;
}

// --- identities ----------------------------------------------------------------------

CheckReport identity_check(int max_n, int cap) {
  CheckReport report;
  Recorder complement("identity.runs-plus-wdruns", "runs(w) + wdruns(w) = n + 1");
  Recorder descents("identity.druns-complement", "druns(w) = n + 1 - wruns(w)");
  Recorder valleys("identity.valley-sum", "val(w) = sum over ell of ell_val(w); symv(w) <= val(w)");
  Recorder peaks("identity.peak-sum", "peak(w) = sum over ell of ell_peak(w); symp(w) <= peak(w)");
  for (int n = 1; n <= max_n; ++n) {
    const unsigned n1 = static_cast<unsigned>(n) + 1;
    for (const Word& w : enumerate_flattened(n, cap)) {
      const unsigned runs = statistic(w, StatKind::runs());
      const unsigned wruns = statistic(w, StatKind::wruns());
      complement.equal(n, std::nullopt, n1, runs + statistic(w, StatKind::wdruns()));
      descents.equal(n, std::nullopt, n1 - wruns, statistic(w, StatKind::druns()));
      unsigned val_sum = 0, peak_sum = 0;
      for (int ell = 1; ell <= n; ++ell) {
        val_sum += statistic(w, StatKind::ell_val(ell));
        peak_sum += statistic(w, StatKind::ell_peak(ell));
      }
      const unsigned val = statistic(w, StatKind::val());
      const unsigned peak = statistic(w, StatKind::peak());
      valleys.equal(n, std::nullopt, val, val_sum);
      valleys.equal(n, std::nullopt, true, statistic(w, StatKind::symv()) <= val);
      peaks.equal(n, std::nullopt, peak, peak_sum);
      peaks.equal(n, std::nullopt, true, statistic(w, StatKind::symp()) <= peak);
    }
  }
  for (Recorder* r : {&complement, &descents, &valleys, &peaks}) {
    Check c = r->finish();
    c.scope += ", every flattened word with n <= " + std::to_string(max_n);
    report.checks.push_back(std::move(c));
  }
  {
    Recorder r("identity.short-peak-fibonacci",
               "[x^n y^0] P_1 = F_(2(n-1)) + 1, n <= " + std::to_string(max_n));
    const Triangle t = expand(StatKind::ell_peak(1), max_n, 0);
    for (int n = 1; n <= max_n; ++n)
      if (!r.equal(n, 0, BigInt(fibonacci(2 * static_cast<unsigned long>(n - 1)) + 1), t.at(n, 0)))
        break;
    report.checks.push_back(r.finish());
  }
  return report;
}

CheckReport full_report(const VerifyOptions& options) {
  CheckReport report = golden_check();
  report.merge(oeis_check());
  for (const StatKind& kind : options.kinds)
    report.merge(cross_check(kind, options.triangle_max_n, options.totals_max_n, options.cap));
  report.merge(bijection_check(options.bijection_max_n));
  report.merge(identity_check(options.triangle_max_n, options.cap));
  report.finalize();
  return report;
}

}  // namespace flatcat
