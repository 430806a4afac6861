#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "pcix/error.hpp"
#include "pcix/io.hpp"
#include "pcix/sampling.hpp"

using namespace pcix;

TEST_CASE("parse_csv full grid") {
  const PCMatrix a = parse_csv("1,2,2\n0.5,1,2\n0.5,0.5,1");
  const UpperEntry upper[] = {{1, 2, 2.0}, {1, 3, 2.0}, {2, 3, 2.0}};
  CHECK(a == make_matrix(upper));

  const PCMatrix b = parse_csv("1,2\n0.5,1\n");
  CHECK(b.size() == 2);
  CHECK(b(0, 1) == 2.0);

  // Typed reciprocals within 1e-6 are accepted and then made exact.
  const PCMatrix c = parse_csv("1, 2.62, 1\r\n0.381679389, 1, 1\r\n1, 1, 1\r\n");
  CHECK(c(2, 0) == 1.0);
  CHECK(c(1, 0) == 1.0 / 2.62);
}

TEST_CASE("parse_csv upper triangle") {
  const PCMatrix a = parse_csv("# A\n1,2,2\n\n1,3,2\n2,3,2\n");
  CHECK(a == parse_csv("1,2,2\n0.5,1,2\n0.5,0.5,1"));
  const PCMatrix b = parse_csv("2,3,5\n1,3,4\n1,2,0.5\n");
  CHECK(b(0, 1) == 0.5);
  CHECK(b(1, 2) == 5.0);
}

TEST_CASE("parse_csv errors") {
  CHECK_THROWS_AS(parse_csv("1,2\n0.4,1"), ValidationError);
  CHECK_THROWS_AS(parse_csv("1,2,3\n0.5,1\n"), ValidationError);
  CHECK_THROWS_AS(parse_csv("1,-2\n-0.5,1"), ValidationError);
  CHECK_THROWS_AS(parse_csv("1"), ValidationError);
  CHECK_THROWS_AS(parse_csv(""), ValidationError);
  CHECK_THROWS_AS(parse_csv("1,abc\n2,1"), ValidationError);
  CHECK_THROWS_AS(parse_csv("1,2,0\n1,3,1\n2,3,1"), ValidationError);
  CHECK_THROWS_AS(parse_csv("1,2,3\n1,3,1\n"), ValidationError);  // missing (2,3)
}

TEST_CASE("CSV round trip") {
  Rng rng(55);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = 2 + rng.index(20);
    const PCMatrix m = random_reciprocal(n, rng, 1e4);
    const PCMatrix full = parse_csv(to_csv(m));
    const PCMatrix upper = parse_csv(to_upper_csv(m));
    REQUIRE(full == upper);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) REQUIRE(std::abs(full(i, j) / m(i, j) - 1.0) <= 1e-12);
  }
}

TEST_CASE("matrix JSON") {
  const auto doc = parse_matrix_json(nlohmann::json::parse(
      R"({"n": 3, "name": "A", "entries": [[1, 2, 2], [0.5, 1, 2], [0.5, 0.5, 1]]})"));
  CHECK(doc.name == "A");
  CHECK(doc.matrix(0, 2) == 2.0);

  const auto j = to_json(doc);
  CHECK(j["n"] == 3);
  CHECK(j["name"] == "A");
  CHECK(parse_matrix_json(j).matrix == doc.matrix);

  using nlohmann::json;
  CHECK_THROWS_AS(parse_matrix_json(json::parse(R"({"n": 2})")), ValidationError);
  CHECK_THROWS_AS(parse_matrix_json(json::parse(R"({"n": 3, "entries": [[1,2],[0.5,1]]})")), ValidationError);
  CHECK_THROWS_AS(parse_matrix_json(json::parse(R"({"entries": [[1,"2"],[0.5,1]]})")), ValidationError);
  CHECK_THROWS_AS(parse_matrix_json(json::parse(R"({"entries": [[1,2],[0.5]]})")), ValidationError);
  CHECK_THROWS_AS(parse_matrix_json(json::parse(R"([1,2])")), ValidationError);
  // JSON ingestion is strict: 1e-9 relative.
  CHECK_THROWS_AS(parse_matrix_json(json::parse(R"({"entries": [[1,3],[0.333333,1]]})")), ValidationError);
}

TEST_CASE("RI table JSON") {
  const RITable ri = parse_ri_table(nlohmann::json::parse(R"({"3": 0.52, "4": 0.89})"));
  CHECK(ri.at(3) == 0.52);
  CHECK(ri.at(4) == 0.89);
  CHECK(parse_ri_table(to_json(RITable::defaults())).values() == RITable::defaults().values());
  CHECK_THROWS_AS(parse_ri_table(nlohmann::json::parse(R"({"x": 0.52})")), ValidationError);
  CHECK_THROWS_AS(parse_ri_table(nlohmann::json::parse(R"({"3": "a"})")), ValidationError);
  CHECK_THROWS_AS(parse_ri_table(nlohmann::json::parse(R"({"3": -1})")), ValidationError);
}

TEST_CASE("load_matrix_file detects the format") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto csv = dir / "pcix_io_test.csv";
  const auto js = dir / "pcix_io_test.json";
  std::ofstream(csv) << "1,2,2\n1,3,2\n2,3,2\n";
  std::ofstream(js) << "  {\"entries\": [[1,2,2],[0.5,1,2],[0.5,0.5,1]]}";
  CHECK(load_matrix_file(csv).matrix == load_matrix_file(js).matrix);
  std::ofstream(js) << "{ broken";
  CHECK_THROWS_AS(load_matrix_file(js), ValidationError);
  CHECK_THROWS_AS(load_matrix_file(dir / "pcix_no_such_file.csv"), ValidationError);
  std::filesystem::remove(csv);
  std::filesystem::remove(js);
}

TEST_CASE("number formatting") {
  CHECK(format_indicator(0.0519833917) == "0.051983");
  CHECK(format_indicator(0.5) == "0.500000");
  CHECK(round_significant(1.0 / 3.0, 12) == 0.333333333333);
  CHECK(round_significant(6.406123512830872, 12) == 6.40612351283);
}
