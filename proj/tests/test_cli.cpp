#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "flatcat/cli.hpp"

using namespace flatcat;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "--n", "10"}).out == "9842\n");
  CHECK(run({"count", "--n", "9", "--route", "enumeration"}).out == "3281\n");
  CHECK(run({"count", "--n", "40"}).out == "2026277576509488134\n");
  CHECK(run({"count", "--n", "0"}).status == kExitUsageError);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--n", "3"}).out == "0,0,0\n0,0,1\n0,1,0\n0,1,1\n0,1,2\n");
  CHECK(run({"enumerate", "--n", "3", "--compact", "--weakly-increasing"}).out ==
        "000\n001\n011\n012\n");
  CHECK(run({"enumerate", "--n", "25"}).status == kExitDomainError);
  CHECK(run({"enumerate", "--n", "9", "--cap", "8"}).status == kExitDomainError);
}

TEST_CASE("stats") {
  CHECK(run({"stats", "--word", "0122200122322334544", "--stat", "druns"}).out == "16\n");
  CHECK(run({"stats", "--word", "0,1,2,2,2,0,0,1,2,2,3,2,2,3,3,4,5,4,4", "--stat", "ell_val",
             "--ell", "2"}).out == "2\n");
  const Run all = run({"stats", "--word", "010"});
  CHECK(all.status == 0);
  CHECK(all.out.find("ell_peak(1) 1\n") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"stats", "--word", "01210", "--format", "json"}).out);
  CHECK(j["flattened"] == false);
  CHECK(j["stats"]["runs"] == 3);
  CHECK(run({"stats", "--word", "02"}).status == kExitDomainError);
  CHECK(run({"stats", "--word", "0x1"}).status == kExitUsageError);
  CHECK(run({"stats", "--word", "010", "--stat", "ell_val"}).status == kExitUsageError);
  CHECK(run({"stats", "--word", "010", "--stat", "runs", "--ell", "2"}).status == kExitUsageError);
}

TEST_CASE("triangle") {
  const Run csv = run({"triangle", "--stat", "runs", "--max-n", "4", "--format", "csv"});
  CHECK(csv.status == 0);
  CHECK(csv.out.find("\n4,3,6\n") != std::string::npos);
  CHECK(run({"triangle", "--stat", "runs", "--max-n", "4", "--format", "csv", "--source",
             "enumeration"}).out == csv.out);
  CHECK(run({"triangle", "--stat", "ell_val", "--ell", "2", "--max-n", "6"}).out.find("115 7") !=
        std::string::npos);
  CHECK(run({"triangle", "--stat", "ell_val", "--max-n", "6"}).status == kExitUsageError);
  CHECK(run({"triangle", "--stat", "ell_val", "--ell", "9", "--max-n", "6"}).status ==
        kExitUsageError);
  CHECK(run({"triangle", "--stat", "runs", "--format", "svg"}).status == kExitUsageError);
  CHECK(run({"triangle", "--stat", "runs", "--max-n", "5", "--max-k", "2", "--source",
             "enumeration"}).status == kExitUsageError);
}

TEST_CASE("totals") {
  const std::string series = run({"totals", "--stat", "peak", "--max-n", "11"}).out;
  CHECK(series.find("10 14760\n11 49205\n") != std::string::npos);
  CHECK(run({"totals", "--stat", "peak", "--max-n", "11", "--route", "closed-form"}).out == series);
  CHECK(run({"totals", "--stat", "peak", "--max-n", "11", "--route", "enumeration"}).out == series);
  const auto j = nlohmann::json::parse(
      run({"totals", "--stat", "runs", "--max-n", "8", "--format", "json"}).out);
  CHECK(j["values"].back() == 4923);
  CHECK(run({"totals", "--stat", "runs", "--max-n", "3", "--format", "csv"}).out ==
        "n,total\n1,1\n2,3\n3,10\n");
}

TEST_CASE("coeffs") {
  const Run gf = run({"coeffs", "--stat", "peak"});
  CHECK(gf.out == "numerator: x - 2*x^2\ndenominator: 1 - 4*x + 4*x^2 - x^2*y\n");
  CHECK(run({"coeffs", "--stat", "val", "--n", "7", "--k", "2"}).out == "12\n");
  CHECK(run({"coeffs", "--stat", "runs", "--n", "4"}).out == "0 1 6 6 1 0\n");
  CHECK(run({"coeffs", "--stat", "runs", "--k", "4"}).status == kExitUsageError);
}

TEST_CASE("bijection") {
  CHECK(run({"bijection", "--which", "ocp", "--word", "0,1,1,2,0,1,2,0"}).out ==
        "{1,2}{6}{4,5,7}{3,8}\n");
  CHECK(run({"bijection", "--which", "composition", "--word", "010"}).out == "1,1\n");
  CHECK(run({"bijection", "--which", "composition-inverse", "--input", "1,1"}).out == "0,1,0\n");
  CHECK(run({"bijection", "--which", "phi", "--word", "00"}).out == "0,1\n");
  CHECK(run({"bijection", "--which", "dotted", "--input", "0.1.0"}).status == 0);
  CHECK(run({"bijection", "--which", "ocp", "--word", "01210"}).status == kExitDomainError);
  CHECK(run({"bijection", "--which", "ocp"}).status == kExitUsageError);
  CHECK(run({"bijection", "--which", "nope", "--word", "0"}).status == kExitUsageError);
  CHECK(run({"bijection", "--which", "composition-inverse", "--input", "1"}).status ==
        kExitDomainError);
}

TEST_CASE("render") {
  CHECK(run({"render", "--word", "010"}).out == "  _\n_| |_\n");
  CHECK(run({"render", "--word", "010", "--mark", "1-3"}).out == "  =\n=! !=\n");
  CHECK(run({"render", "--word", "010", "--stat", "ell_peak", "--ell", "1"}).out ==
        "  =\n=! !=\n");
  CHECK(run({"render", "--word", "010", "--format", "svg"}).out.find("<svg") != std::string::npos);
  CHECK(run({"render", "--word", "010", "--mark", "2-5"}).status == kExitUsageError);
  CHECK(run({"render", "--word", "010", "--format", "png"}).status == kExitUsageError);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--max-n", "7", "--totals-max-n", "9", "--bijection-max-n", "6",
                     "--format", "json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["green"] == true);
  CHECK(j["errata"].size() == 2);
}

TEST_CASE("usage errors and help") {
  const Run none = run({});
  CHECK(none.status == kExitUsageError);
  CHECK(none.err.find("count") != std::string::npos);
  CHECK(run({"frobnicate"}).status == kExitUsageError);
  CHECK(run({"count", "--n", "3", "--bogus"}).status == kExitUsageError);
  CHECK(run({"count", "-n", "3"}).status == kExitUsageError);
  const Run help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("triangle") != std::string::npos);
  CHECK(run({"-h"}).status == kExitUsageError);
  CHECK(run({"triangle", "--help"}).out.find("--max-n") != std::string::npos);
}

TEST_CASE("output is a pure function of the arguments") {
  const std::vector<std::string> args{"triangle", "--stat", "symp", "--max-n", "9", "--format",
                                      "json"};
  CHECK(run(args).out == run(args).out);
}
