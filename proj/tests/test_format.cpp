#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "flatcat/errors.hpp"
#include "flatcat/format.hpp"

using namespace flatcat;

namespace {

std::string render(const Triangle& t, OutputFormat f) {
  std::ostringstream os;
  write_triangle(os, t, f);
  return os.str();
}

}  // namespace

TEST_CASE("csv") {
  const std::string csv = render(expand(StatKind::runs(), 4, 4), OutputFormat::csv);
  CHECK(csv.rfind("n,k,count\n1,1,1\n", 0) == 0);
  CHECK(csv.find("\n4,3,6\n") != std::string::npos);
  CHECK(csv.find("\n4,0,") == std::string::npos);
  CHECK(csv.substr(csv.size() - 6) == "4,4,1\n");
}

TEST_CASE("json") {
  const std::string text = render(expand(StatKind::val(), 5, 2), OutputFormat::json);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["stat"] == "val");
  CHECK(j["n_min"] == 1);
  CHECK(j["k_min"] == 0);
  REQUIRE(j["rows"].size() == 5);
  CHECK(j["rows"][3] == nlohmann::json::array({13, 1, 0}));

  // Counts beyond 64 bits stay exact integers in the text.
  const std::string wide = render(expand(StatKind::runs(), 60, 1), OutputFormat::json);
  CHECK(wide.find("\"stat\":\"runs\"") != std::string::npos);
}

TEST_CASE("text and markdown") {
  const Triangle t = expand(StatKind::runs(), 3, 3);
  CHECK(render(t, OutputFormat::text) == "1 0 0\n1 1 0\n1 3 1\n");
  const std::string md = render(t, OutputFormat::markdown);
  CHECK(md.find("| n | k=1 | k=2 | k=3 |") != std::string::npos);
  CHECK(md.find("| 3 | 1 | 3 | 1 |") != std::string::npos);
}

TEST_CASE("format names") {
  for (const char* name : {"text", "csv", "json", "markdown", "svg"})
    CHECK(format_name(parse_output_format(name)) == name);
  CHECK_THROWS_AS(parse_output_format("xml"), UsageError);
  CHECK_THROWS_AS(render(expand(StatKind::runs(), 2, 2), OutputFormat::svg), UsageError);
}
