#include <doctest.h>

#include <string>
#include <vector>

#include "coriolis/csv.hpp"

using namespace coriolis;

namespace {

std::vector<ScanPoint> sample_points() {
  std::vector<ScanPoint> points(2);
  points[0].parameter_value = -55e-6;
  points[0].shots = {{0.61, 0.39, 0.52, 0.48}, {0.45, 0.55, 0.60, 0.40}};
  points[1].parameter_value = 175e-6;
  points[1].shots = {{0.50, 0.50, 0.50, 0.50}};
  return points;
}

}  // namespace

TEST_CASE("shot table round-trips at full precision") {
  const auto points = sample_points();
  const std::string text = shot_table_to_csv(points);
  CHECK(text.rfind(kShotCsvHeader, 0) == 0);

  const auto back = parse_shot_csv(text);
  REQUIRE(back.size() == 2);
  CHECK(back[0].parameter_value == points[0].parameter_value);
  REQUIRE(back[0].shots.size() == 2);
  REQUIRE(back[1].shots.size() == 1);
  CHECK(back[0].shots[0].pop_a == points[0].shots[0].pop_a);
  CHECK(back[0].shots[1].pop_d == points[0].shots[1].pop_d);
  CHECK(back[0].shots[0].x() == points[0].shots[0].x());
}

TEST_CASE("rows with the same parameter value are grouped") {
  const std::string text =
      std::string(kShotCsvHeader) +
      "\n1,0,0.6,0.4,0.5,0.5,0.2,0\n1,1,0.5,0.5,0.5,0.5,0,0\n"
      "2,0,0.7,0.3,0.5,0.5,0.4,0\n";
  const auto points = parse_shot_csv(text);
  REQUIRE(points.size() == 2);
  CHECK(points[0].shots.size() == 2);
  CHECK(points[1].shots.size() == 1);
}

TEST_CASE("schema violations carry line numbers") {
  try {
    parse_shot_csv(std::string(kShotCsvHeader) +
                   "\n1,0,0.6,0.4,0.5,0.5,0.2,0\n1,1,oops,0.4,0.5,0.5,0,0\n");
    FAIL("expected CsvError");
  } catch (const CsvError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_shot_csv("wrong,header\n1,2,3\n"), CsvError);
  CHECK_THROWS_AS(parse_shot_csv(""), CsvError);
  // Wrong field count.
  CHECK_THROWS_AS(
      parse_shot_csv(std::string(kShotCsvHeader) + "\n1,0,0.6,0.4\n"),
      CsvError);
  // Population outside [0, 1].
  CHECK_THROWS_AS(
      parse_shot_csv(std::string(kShotCsvHeader) +
                     "\n1,0,1.6,0.4,0.5,0.5,0.2,0\n"),
      CsvError);
}

TEST_CASE("binned contrast table serializes") {
  std::vector<BinnedContrast> binned(1);
  binned[0].parameter_value = 57.56e-6;
  binned[0].mean_contrast = 0.27;
  binned[0].standard_error = 0.012;
  binned[0].bin_count = 5;
  const std::string text = binned_to_csv(binned);
  CHECK(text.rfind(kBinnedCsvHeader, 0) == 0);
  CHECK(text.find("0.27") != std::string::npos);
  CHECK(text.find(",5\n") != std::string::npos);
}
