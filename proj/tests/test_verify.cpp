#include <doctest.h>

#include <json.hpp>

#include "flatcat/series.hpp"
#include "flatcat/verify.hpp"

using namespace flatcat;

TEST_CASE("cross check of the runs family") {
  const CheckReport r = cross_check(StatKind::runs(), 8);
  CHECK(r.green());
  CHECK(r.errata.empty());
  REQUIRE(r.find("cross.runs.enumeration-vs-series") != nullptr);
  REQUIRE(r.find("cross.runs.closed-form-cells") != nullptr);
  REQUIRE(r.find("cross.runs.row-sums") != nullptr);
  REQUIRE(r.find("cross.runs.totals") != nullptr);
  CHECK(r.find("cross.runs.nonexistent") == nullptr);
}

TEST_CASE("cross checks for indexed kinds") {
  CHECK(cross_check(StatKind::ell_peak(1), 6).green());
  const CheckReport v2 = cross_check(StatKind::ell_val(2), 10);
  CHECK(v2.green());
  REQUIRE(v2.errata.size() == 1);
  CHECK(v2.errata[0].id == "ell-valley-total-exponent");
  CHECK(v2.errata[0].evidence.find("ell=1, n=4") != std::string::npos);
}

TEST_CASE("printed ell-valley total") {
  CHECK(printed_ell_valley_total(2, 6) == BigRational(7));
  CHECK(printed_ell_valley_total(1, 4) == BigRational(4));
  CHECK(printed_ell_valley_total(3, 7) == BigRational(1));
  // The printed and corrected forms coincide for ell = 2.
  for (int n = 4; n <= 20; ++n)
    CHECK(printed_ell_valley_total(2, n) == BigRational(closed_form_total(StatKind::ell_val(2), n)));
}

TEST_CASE("published data checks") {
  const CheckReport golden = golden_check();
  CHECK(golden.checks.size() == 10);
  CHECK(golden.green());

  const CheckReport oeis = oeis_check();
  CHECK(oeis.green());
  REQUIRE(oeis.errata.size() == 1);
  CHECK(oeis.errata[0].id == "A261064-duplicated-term");
  CHECK(oeis.errata[0].evidence.find("n=11") != std::string::npos);
}

TEST_CASE("bijection and identity checks") {
  const CheckReport b = bijection_check(7);
  CHECK(b.checks.size() == 4);
  CHECK(b.green());
  const CheckReport i = identity_check(9);
  CHECK(i.green());
}

TEST_CASE("report assembly") {
  CheckReport a;
  a.checks.push_back({"b", "second", true, {}});
  a.errata.push_back({"e", "loc", "p", "c", "ev"});
  CheckReport b;
  b.checks.push_back({"a", "first", false, Counterexample{3, 2, "5", "6"}});
  b.errata.push_back({"e", "loc", "p", "c", "ev"});
  a.merge(b);
  a.finalize();
  CHECK_FALSE(a.green());
  REQUIRE(a.checks.size() == 2);
  CHECK(a.checks[0].id == "a");
  CHECK(a.errata.size() == 1);

  const auto j = nlohmann::json::parse(a.to_json());
  CHECK(j["green"] == false);
  CHECK(j["checks"][0]["counterexample"]["k"] == 2);
  CHECK(j["checks"][1]["counterexample"].is_null());
  const std::string text = a.to_text();
  CHECK(text.find("FAIL a") != std::string::npos);
  CHECK(text.find("expected 5, got 6") != std::string::npos);
  CHECK(text.find("1/2 checks passed") != std::string::npos);
}

TEST_CASE("full report") {
  VerifyOptions small;
  small.triangle_max_n = 8;
  small.totals_max_n = 10;
  small.bijection_max_n = 7;
  const CheckReport r = full_report(small);
  CHECK(r.green());
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                       [](const Check& x, const Check& y) { return x.id < y.id; }));
  REQUIRE(r.errata.size() == 2);
  CHECK(r.errata[0].id == "A261064-duplicated-term");
  CHECK(r.errata[1].id == "ell-valley-total-exponent");
  CHECK(full_report(small).to_json() == r.to_json());
}
