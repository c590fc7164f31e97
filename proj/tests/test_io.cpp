#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "torifan/constructions.hpp"
#include "torifan/io.hpp"

using namespace torifan;

TEST_CASE("fan JSON round trip over the catalog") {
  for (const CatalogEntry& e : catalog()) {
    Fan back = fan_from_json(fan_to_json(e.fan));
    CHECK(back == e.fan);
  }
}

TEST_CASE("fan parsing accepts numeric and string integers") {
  Fan f = fan_from_json(R"({
    "dim": 2,
    "rays": [[1, 0], ["0", "1"], [-1, "-1"]],
    "max_cones": [[1, 2], [0, 2], [0, 1]]
  })");
  CHECK(f == projective_space_fan(2));
}

TEST_CASE("fan parsing rejects malformed documents") {
  CHECK_THROWS_WITH_AS(static_cast<void>(fan_from_json("[")),
                       doctest::Contains("invalid JSON"), Error);
  CHECK_THROWS_WITH_AS(static_cast<void>(fan_from_json("[1,2]")),
                       doctest::Contains("object"), Error);
  CHECK_THROWS_WITH_AS(static_cast<void>(fan_from_json(R"({"dim": 1, "rays": []})")),
                       doctest::Contains("max_cones"), Error);
  CHECK_THROWS_WITH_AS(
      static_cast<void>(fan_from_json(R"({"dim": "two", "rays": [], "max_cones": []})")),
      doctest::Contains("dim"), Error);
  CHECK_THROWS_WITH_AS(
      static_cast<void>(fan_from_json(R"({"dim": 1, "rays": [[1.5]], "max_cones": []})")),
      doctest::Contains("integer"), Error);
  CHECK_THROWS_WITH_AS(
      static_cast<void>(fan_from_json(R"({"dim": 1, "rays": [["1/2"]], "max_cones": []})")),
      doctest::Contains("integer"), Error);
  CHECK_THROWS_WITH_AS(
      static_cast<void>(fan_from_json(R"({"dim": 1, "rays": [[1]], "max_cones": [[0.5]]})")),
      doctest::Contains("ray index"), Error);
  CHECK_THROWS_WITH_AS(
      static_cast<void>(fan_from_json(R"({"dim": 1, "rays": 3, "max_cones": []})")),
      doctest::Contains("array"), Error);
}

TEST_CASE("divisor JSON round trip and golden form") {
  Fan plane = projective_space_fan(2);
  InvariantDivisor d;
  d.fan = plane;
  d.coeffs = {Rat(1), Rat(-5) / 3, Rat(0)};
  CHECK(divisor_to_json(d) ==
        "{\n  \"coeffs\": [\n    \"1\",\n    \"-5/3\",\n    \"0\"\n  ]\n}\n");
  InvariantDivisor back = divisor_from_json(divisor_to_json(d), plane);
  CHECK(back.coeffs == d.coeffs);
  CHECK(back.fan == plane);

  InvariantDivisor mixed = divisor_from_json(R"({"coeffs": [2, "1/2", "-3"]})", plane);
  CHECK(mixed.coeffs == std::vector<Rat>{Rat(2), Rat(1) / 2, Rat(-3)});
}

TEST_CASE("divisor parsing rejects malformed documents") {
  Fan plane = projective_space_fan(2);
  CHECK_THROWS_WITH_AS(static_cast<void>(divisor_from_json("{}", plane)),
                       doctest::Contains("coeffs"), Error);
  CHECK_THROWS_WITH_AS(
      static_cast<void>(divisor_from_json(R"({"coeffs": [1, 2]})", plane)),
      doctest::Contains("2 coefficients for 3 rays"), Error);
  CHECK_THROWS_WITH_AS(
      static_cast<void>(divisor_from_json(R"({"coeffs": [0.5, 1, 1]})", plane)),
      doctest::Contains("p/q"), Error);
  CHECK_THROWS_AS(
      static_cast<void>(divisor_from_json(R"({"coeffs": ["1/0", 1, 1]})", plane)),
      Error);
}

TEST_CASE("text file reading") {
  const char* path = "io_roundtrip_tmp.json";
  {
    std::ofstream out(path);
    out << fan_to_json(sato_blowup_fan());
  }
  Fan back = fan_from_json(read_text_file(path));
  CHECK(back == sato_blowup_fan());
  std::remove(path);
  CHECK_THROWS_WITH_AS(static_cast<void>(read_text_file("io_no_such_file.json")),
                       doctest::Contains("cannot read"), Error);
}
