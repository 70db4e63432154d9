#include <doctest.h>

#include <algorithm>
#include <set>

#include "flatcat/errors.hpp"
#include "flatcat/lattice.hpp"
#include "flatcat/word.hpp"
#include "oracle.hpp"

using namespace flatcat;

namespace {

Word w(const char* text) { return Word::parse(text); }

std::vector<Word> collect(FlattenedWords words) {
  std::vector<Word> out;
  for (const Word& x : words) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("parse accepts digit strings and comma lists") {
  CHECK(w("0122") == Word{0, 1, 2, 2});
  CHECK(w("0,1,2,10,11") == Word{0, 1, 2, 10, 11});
  CHECK(w(" 0, 1 ,2") == Word{0, 1, 2});
  CHECK(w("").empty());
  CHECK(Word{0, 1, 10}.to_string() == "0,1,10");
  CHECK(Word{0, 1, 10}.to_compact_string() == "0,1,10");
  CHECK(Word{0, 1, 2}.to_compact_string() == "012");
  CHECK_THROWS_AS(w("01a"), UsageError);
  CHECK_THROWS_AS(w("0,,1"), UsageError);
  CHECK_THROWS_AS(w("0,-1"), UsageError);
  CHECK_THROWS_AS(w("0,1,"), UsageError);
}

TEST_CASE("validate_catalan") {
  CHECK(validate_catalan(w("0123").letters()));
  CHECK(validate_catalan(w("0").letters()));
  CHECK_FALSE(validate_catalan(w("0021").letters()));
  CHECK_FALSE(validate_catalan(w("1").letters()));
  CHECK_THROWS_AS(validate_catalan(Word{}.letters()), DomainError);
}

TEST_CASE("validate_flattened") {
  CHECK(validate_flattened(w("0012301222345523343")));
  CHECK(validate_flattened(w("0")));
  CHECK_FALSE(validate_flattened(w("012321")));
  CHECK_FALSE(validate_flattened(w("01210")));
  CHECK_FALSE(validate_flattened(w("0021")));
  CHECK_THROWS_AS(validate_flattened(Word{}), DomainError);

  // 01210 is the only length-5 Catalan word that is not flattened.
  std::vector<oracle::Letters> rejected;
  for (const auto& x : oracle::catalan_words(5))
    if (!validate_flattened(Word(x))) rejected.push_back(x);
  REQUIRE(rejected.size() == 1);
  CHECK(Word(rejected.front()) == w("01210"));
}

TEST_CASE("validate_flattened agrees with the oracle on all Catalan words") {
  for (int n = 1; n <= 10; ++n)
    for (const auto& x : oracle::catalan_words(n))
      REQUIRE(validate_flattened(Word(x)) == oracle::is_flattened(x));
}

TEST_CASE("first return decomposition") {
  const FirstReturnSplit s = first_return_decompose(w("0122200122322334544"));
  CHECK(s.prime == w("0111"));
  CHECK(s.rest == w("00122322334544"));

  const FirstReturnSplit single = first_return_decompose(w("0"));
  CHECK(single.prime.empty());
  CHECK(single.rest.empty());

  const FirstReturnSplit two = first_return_decompose(w("00"));
  CHECK(two.prime.empty());
  CHECK(two.rest == w("0"));

  CHECK_THROWS_AS(first_return_decompose(Word{}), DomainError);
  CHECK_THROWS_AS(first_return_decompose(w("10")), DomainError);

  for (int n = 1; n <= 9; ++n)
    for (const auto& x : oracle::catalan_words(n)) {
      const Word word(x);
      const FirstReturnSplit split = first_return_decompose(word);
      REQUIRE(recompose(split) == word);
      REQUIRE((split.rest.empty() || split.rest[0] == 0));
      REQUIRE((split.prime.empty() || validate_catalan(split.prime.letters())));
    }
}

TEST_CASE("enumerate_flattened matches the filtered Catalan words") {
  CHECK(collect(enumerate_flattened(1)) == std::vector<Word>{w("0")});
  for (int n = 1; n <= 11; ++n) {
    std::vector<Word> expected;
    for (const auto& x : oracle::flattened_words(n)) expected.push_back(Word(x));
    REQUIRE(collect(enumerate_flattened(n)) == expected);
  }
}

TEST_CASE("enumerate_flattened at n = 4 lists every Catalan word of length 4") {
  const std::vector<Word> words = collect(enumerate_flattened(4));
  CHECK(words.size() == 14);
  CHECK(words.size() == oracle::catalan_words(4).size());
  CHECK(words.front() == w("0000"));
  CHECK(words.back() == w("0123"));
  CHECK(collect(enumerate_flattened(5)).size() == 41);
}

TEST_CASE("enumeration errors") {
  CHECK_THROWS_AS(enumerate_flattened(0), DomainError);
  CHECK_THROWS_AS(enumerate_flattened(-3), DomainError);
  CHECK_THROWS_AS(enumerate_flattened(kDefaultExhaustiveCap + 1), ResourceError);
  CHECK_THROWS_AS(enumerate_flattened(9, 8), ResourceError);
  CHECK_NOTHROW(enumerate_flattened(8, 8));
  CHECK_THROWS_AS(enumerate_weakly_increasing(0), DomainError);
  CHECK_THROWS_AS(count_flattened(0), DomainError);
  try {
    enumerate_flattened(30);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("20") != std::string::npos);
  }
}

TEST_CASE("enumerate_weakly_increasing") {
  std::vector<Word> three;
  for (const Word& x : enumerate_weakly_increasing(3)) three.push_back(x);
  CHECK(three == std::vector<Word>{w("000"), w("001"), w("011"), w("012")});

  for (int n = 1; n <= 10; ++n) {
    std::vector<Word> expected;
    for (const auto& x : oracle::catalan_words(n))
      if (std::is_sorted(x.begin(), x.end())) expected.push_back(Word(x));
    std::vector<Word> got;
    for (const Word& x : enumerate_weakly_increasing(n)) {
      REQUIRE(is_weakly_increasing(x));
      got.push_back(x);
    }
    REQUIRE(got == expected);
    REQUIRE(got.size() == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("count_flattened") {
  CHECK(count_flattened(1) == 1);
  CHECK(count_flattened(10) == 9842);
  CHECK(count_flattened(14) == 797162);
  CHECK(count_flattened(40) == (power(3, 39) + 1) / 2);
  std::size_t streamed = 0;
  for ([[maybe_unused]] const Word& x : enumerate_flattened(13)) ++streamed;
  CHECK(streamed == 265721);
}

TEST_CASE("Word helpers") {
  CHECK(w("012").shifted(1) == w("123"));
  CHECK(w("01") + w("00") == w("0100"));
  CHECK(w("001") < w("01"));
}

TEST_CASE("lattice diagram geometry") {
  const LatticeDiagram single = lattice_diagram(w("0"));
  REQUIRE(single.segments.size() == 1);
  CHECK(single.segments[0] == LatticeSegment{0, 0, 1, 0, false});
  CHECK(single.width == 1);
  CHECK(single.height == 0);

  const Word fig = w("0122200122322334544");
  const LatticeDiagram d = lattice_diagram(fig);
  CHECK(d.width == 19);
  CHECK(d.height == 5);
  std::vector<int> heights;
  int vertical_units = 0;
  for (const LatticeSegment& s : d.segments) {
    if (s.horizontal()) heights.push_back(s.y0);
    else vertical_units += 1;
  }
  CHECK(heights == std::vector<int>(fig.letters().begin(), fig.letters().end()));
  int expected_vertical = 0;
  for (std::size_t i = 1; i < fig.size(); ++i) expected_vertical += std::abs(fig[i] - fig[i - 1]);
  CHECK(vertical_units == expected_vertical);

  CHECK_THROWS_AS(lattice_diagram(w("02")), DomainError);
}

TEST_CASE("lattice highlights") {
  const LetterRange peak{0, 2};
  const LatticeDiagram d = lattice_diagram(w("010"), std::span<const LetterRange>(&peak, 1));
  for (const LatticeSegment& s : d.segments) CHECK(s.highlighted);

  const LetterRange middle{1, 1};
  const LatticeDiagram m = lattice_diagram(w("010"), std::span<const LetterRange>(&middle, 1));
  int marked = 0;
  for (const LatticeSegment& s : m.segments) marked += s.highlighted ? 1 : 0;
  CHECK(marked == 1);
}

TEST_CASE("render_lattice") {
  CHECK(render_lattice(w("0"), RenderFormat::ascii) == "_\n");
  const std::string ascii = render_lattice(w("010"), RenderFormat::ascii);
  CHECK(ascii == "  _\n_| |_\n");
  const LetterRange peak{0, 2};
  CHECK(render_lattice(w("010"), RenderFormat::ascii, std::span<const LetterRange>(&peak, 1)) ==
        "  =\n=! !=\n");

  const std::string svg = render_lattice(w("0122"), RenderFormat::svg);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 4);
  CHECK(render_lattice(w("0122"), RenderFormat::svg) == svg);
  CHECK(parse_render_format("svg") == RenderFormat::svg);
  CHECK_THROWS_AS(parse_render_format("png"), UsageError);
}
