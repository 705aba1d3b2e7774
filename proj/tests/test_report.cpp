#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "rootcensus/cubic_census.hpp"
#include "rootcensus/parallel.hpp"
#include "rootcensus/report.hpp"
#include "rootcensus/verify.hpp"

using namespace rootcensus;

TEST_CASE("parallel_reduce partitions exactly") {
  auto sum_range = [](const Int& lo, const Int& hi) {
    Int s(0);
    for (Int i = lo; i <= hi; i++) s += i * i;
    return s;
  };
  Int direct = sum_range(Int(1), Int(1000));
  for (int workers : {1, 2, 3, 7, 8, 1000, 5000}) {
    CHECK(parallel_reduce(Int(1), Int(1000), workers, Int(0), sum_range) == direct);
  }
  // empty and single-element ranges
  CHECK(parallel_reduce(Int(5), Int(4), 8, Int(0), sum_range) == 0);
  CHECK(parallel_reduce(Int(5), Int(5), 8, Int(0), sum_range) == 25);
}

TEST_CASE("census range partition reproduces the census") {
  Int a(50);
  Int b_max = floor_div(a * a, Int(3));
  Int whole = count_P3_plus(a);
  CHECK(count_P3_plus_range(a, Int(1), b_max) == whole);
  // split at an arbitrary interior point, and overshoot both ends
  Int mid = b_max / 3;
  CHECK(count_P3_plus_range(a, Int(1), mid) + count_P3_plus_range(a, mid + 1, b_max) == whole);
  CHECK(count_P3_plus_range(a, Int(-10), b_max + 100) == whole);
  CHECK(count_P3_plus_range(a, b_max + 1, b_max + 50) == 0);
}

TEST_CASE("csv quoting") {
  CensusReport r;
  r.command = "demo";
  r.params = {{"bseq", "2,1/2"}};
  r.extras = {{"note", "says \"hi\""}};
  std::string line = csv_row(r);
  // the comma-bearing cell is quoted, embedded quotes doubled
  CHECK(line.find("\"bseq=2,1/2\"") != std::string::npos);
  CHECK(line.find("\"note=says \"\"hi\"\"\"") != std::string::npos);
  // a clean row has no quotes at all
  CensusReport plain;
  plain.command = "demo";
  plain.count = Int(7);
  CHECK(csv_row(plain).find('"') == std::string::npos);
}

TEST_CASE("decimal_upper never rounds down") {
  Rat third(1, 3);
  std::string s = decimal_upper(third);
  // 15 significant digits of 1/3 rounded up must end in 4
  CHECK(s == "0.333333333333334");
  CHECK(decimal_upper(Rat(294)) == "294");
  CHECK(decimal_upper(Rat(-1, 3)) == "-0.333333333333333");
}

TEST_CASE("render shapes") {
  std::vector<CensusReport> rows(1);
  rows[0].command = "demo";
  std::string csv = render(rows, OutputFormat::csv);
  CHECK(csv.substr(0, csv.find('\n')) == csv_header());
  CHECK(csv.back() == '\n');
  std::string json = render(rows, OutputFormat::json);
  CHECK(json.front() == '[');
  CHECK(json.find("\"count\": null") != std::string::npos);
  CHECK(json.back() == '\n');
}

TEST_CASE("suite membership") {
  CHECK(suite_criteria("all").size() == 16);
  CHECK(suite_criteria("cubic") == std::vector<int>{1, 2, 5, 11, 16});
  CHECK(suite_criteria("maclaurin") == std::vector<int>{3, 4, 6, 7, 12});
  CHECK(suite_criteria("disc") == std::vector<int>{8, 9, 10, 13, 14, 15});
  CHECK_THROWS_AS(suite_criteria("bogus"), std::invalid_argument);
  CHECK(std::string(criterion_name(16)) == "output-determinism");
  CHECK_THROWS_AS(criterion_name(17), std::invalid_argument);
}
