#include <doctest.h>

#include "flatcat/errors.hpp"
#include "flatcat/stats.hpp"
#include "oracle.hpp"

using namespace flatcat;

namespace {

Word w(const char* text) { return Word::parse(text); }

std::vector<StatKind> kinds_up_to_ell(int max_ell) {
  std::vector<StatKind> kinds{StatKind::runs(), StatKind::wruns(), StatKind::druns(),
                              StatKind::wdruns(), StatKind::val(), StatKind::symv(),
                              StatKind::peak(), StatKind::symp()};
  for (int ell = 1; ell <= max_ell; ++ell) {
    kinds.push_back(StatKind::ell_val(ell));
    kinds.push_back(StatKind::ell_peak(ell));
  }
  return kinds;
}

}  // namespace

TEST_CASE("statistics of the long example word") {
  const Word x = w("0122200122322334544");
  CHECK(statistic(x, StatKind::runs()) == 11);
  CHECK(statistic(x, StatKind::wruns()) == 4);
  CHECK(statistic(x, StatKind::druns()) == 16);
  CHECK(statistic(x, StatKind::wdruns()) == 9);
  CHECK(statistic(x, StatKind::ell_val(1)) == 0);
  CHECK(statistic(x, StatKind::ell_val(2)) == 2);
  CHECK(statistic(x, StatKind::symv()) == 1);
  CHECK(statistic(x, StatKind::ell_peak(1)) == 2);
  CHECK(statistic(x, StatKind::ell_peak(2)) == 0);
  CHECK(statistic(x, StatKind::ell_peak(3)) == 1);
  CHECK(statistic(x, StatKind::symp()) == 2);
}

TEST_CASE("run statistics of 012230123122") {
  const Word x = w("012230123122");
  CHECK(statistic(x, StatKind::runs()) == 5);
  CHECK(statistic(x, StatKind::wruns()) == 3);
  CHECK(statistic(x, StatKind::druns()) == 10);
}

TEST_CASE("single letter") {
  const Word x = w("0");
  for (StatKind k : {StatKind::runs(), StatKind::wruns(), StatKind::druns(), StatKind::wdruns()})
    CHECK(statistic(x, k) == 1);
  for (StatKind k : {StatKind::ell_val(1), StatKind::val(), StatKind::symv(), StatKind::ell_peak(1),
                     StatKind::peak(), StatKind::symp()})
    CHECK(statistic(x, k) == 0);
}

TEST_CASE("statistics agree with the factor-matching oracle on every Catalan word") {
  const std::vector<StatKind> kinds = kinds_up_to_ell(5);
  for (int n = 1; n <= 9; ++n)
    for (const auto& x : oracle::catalan_words(n))
      for (StatKind k : kinds)
        REQUIRE(statistic(Word(x), k) ==
                static_cast<unsigned>(oracle::stat(std::string(stat_name(k.stat)), k.ell, x)));
}

TEST_CASE("occurrences") {
  const Word x = w("0122200122322334544");
  const auto valleys = occurrences(x, StatKind::ell_val(2));
  REQUIRE(valleys.size() == 2);
  for (const LetterRange& r : valleys) {
    CHECK(r.last - r.first == 3);
    CHECK(x[r.first] > x[r.first + 1]);
    CHECK(x[r.last] == x[r.first + 1] + 1);
  }
  const auto runs = occurrences(x, StatKind::runs());
  REQUIRE(runs.size() == 11);
  CHECK(runs.front().first == 0);
  CHECK(runs.back().last == x.size() - 1);
  for (std::size_t i = 1; i < runs.size(); ++i) CHECK(runs[i].first == runs[i - 1].last + 1);

  const auto peaks = occurrences(w("010"), StatKind::ell_peak(1));
  REQUIRE(peaks.size() == 1);
  CHECK(peaks.front() == LetterRange{0, 2});

  for (int n = 1; n <= 7; ++n)
    for (const auto& l : oracle::flattened_words(n))
      for (StatKind k : kinds_up_to_ell(3))
        REQUIRE(occurrences(Word(l), k).size() == statistic(Word(l), k));
}

TEST_CASE("StatKind parsing and naming") {
  CHECK(StatKind::parse("runs") == StatKind::runs());
  CHECK(StatKind::parse("ell_val", 2) == StatKind::ell_val(2));
  CHECK(StatKind::parse("ell_peak", 7).name() == "ell_peak(7)");
  CHECK(StatKind::symp().name() == "symp");
  CHECK_THROWS_AS(StatKind::parse("ell_val"), UsageError);
  CHECK_THROWS_AS(StatKind::parse("runs", 1), UsageError);
  CHECK_THROWS_AS(StatKind::parse("bogus"), UsageError);
  CHECK_THROWS_AS(StatKind::ell_val(0).require_valid(), UsageError);
  CHECK(StatKind::runs().k_origin() == 1);
  CHECK(StatKind::wdruns().k_origin() == 1);
  CHECK(StatKind::val().k_origin() == 0);
  CHECK(default_stat_kinds().size() == 14);
}

TEST_CASE("distributions") {
  const Distribution runs4 = distribution(4, StatKind::runs());
  CHECK(runs4.counts == std::map<int, BigInt>{{1, 1}, {2, 6}, {3, 6}, {4, 1}});
  CHECK(runs4.row_sum() == 14);
  CHECK(runs4.at(0) == 0);

  CHECK(distribution(6, StatKind::ell_val(2)).counts == std::map<int, BigInt>{{0, 115}, {1, 7}});
  CHECK(distribution(4, StatKind::symp()).counts == std::map<int, BigInt>{{0, 9}, {1, 5}});

  CHECK(total(5, StatKind::runs()) == 123);
  CHECK(total(6, StatKind::wruns()) == 222);
  CHECK(total(7, StatKind::val()) == 184);

  const std::vector<StatKind> kinds = kinds_up_to_ell(3);
  for (int n = 1; n <= 9; ++n) {
    const std::vector<Distribution> all = distributions(n, kinds);
    REQUIRE(all.size() == kinds.size());
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      const auto expected = oracle::distribution(std::string(stat_name(kinds[i].stat)), kinds[i].ell, n);
      std::map<int, BigInt> as_big;
      for (const auto& [k, c] : expected) as_big[k] = c;
      REQUIRE(all[i].counts == as_big);
      REQUIRE(all[i].n == n);
      REQUIRE(all[i].kind == kinds[i]);
    }
  }
}
