#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "knotcone/borromean.hpp"
#include "knotcone/complex_io.hpp"
#include "knotcone/error.hpp"
#include "knotcone/torus.hpp"

using namespace knotcone;

namespace {

const std::string kData = KNOTCONE_TEST_DATA;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ErrorCode parse_error(std::string_view text) {
  try {
    parse_complex(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error for " << text);
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("parse a well-formed complex") {
  const GradedComplex c =
      parse_complex(R"({"name": "t", "generators": [{"id": "a", "alexander": 1}, {"id": "b", "alexander": 0}],
                        "arrows": [["a", "b"]]})");
  CHECK(c.name() == "t");
  REQUIRE(c.size() == 2);
  CHECK(c.generators()[1] == Generator{"b", 0});
  REQUIRE(c.arrows().size() == 1);
  CHECK(c.arrows()[0] == Arrow{0, 1});
}

TEST_CASE("parse errors") {
  CHECK(parse_error("[1, 2]") == ErrorCode::Parse);
  CHECK(parse_error("{") == ErrorCode::Parse);
  CHECK(parse_error(R"({"generators": [], "arrows": []})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"name": 3, "generators": [], "arrows": []})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"name": "x", "generators": [], "arrows": [], "extra": 1})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"name": "x", "generators": [{"id": "a", "alexander": 0, "maslov": 1}], "arrows": []})") ==
        ErrorCode::Parse);
  CHECK(parse_error(R"({"name": "x", "generators": [{"id": "a", "alexander": 0.5}], "arrows": []})") ==
        ErrorCode::Parse);
  CHECK(parse_error(R"({"name": "x", "generators": [{"id": "a", "alexander": 1}], "arrows": [["a"]]})") ==
        ErrorCode::Parse);
  CHECK(parse_error(R"({"name": "x", "generators": [{"id": "a", "alexander": 1}], "arrows": [["a", "q"]]})") ==
        ErrorCode::Parse);
  CHECK(parse_error(slurp(kData + "/duplicate_arrow.json")) == ErrorCode::Parse);
  CHECK(parse_error(slurp(kData + "/unknown_field.json")) == ErrorCode::Parse);
  CHECK(parse_error(slurp(kData + "/unknown_id.json")) == ErrorCode::Parse);
  CHECK(parse_error(slurp(kData + "/not_json.json")) == ErrorCode::Parse);
}

TEST_CASE("parse keeps invariant violations for validate") {
  const GradedComplex c = read_complex_file(kData + "/grading_up.json");
  CHECK(validate(c).size() == 1);
  CHECK_THROWS_AS(load_complex(kData + "/grading_up.json"), Error);
  try {
    load_complex(kData + "/grading_up.json");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Validation);
    CHECK(std::string(e.what()).find("arrow must strictly decrease grading") != std::string::npos);
  }

  const GradedComplex dup = parse_complex(R"({"name": "d", "generators": [{"id": "a", "alexander": 0},
                                              {"id": "a", "alexander": 1}], "arrows": []})");
  CHECK(validate(dup).size() == 1);
}

TEST_CASE("missing file") {
  try {
    read_complex_file(kData + "/does_not_exist.json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("empty generator list is a valid complex") {
  const GradedComplex c = load_complex(kData + "/empty.json");
  CHECK(c.empty());
  CHECK(total_homology_rank(c) == 0);
}

TEST_CASE("trefoil fixture matches the staircase export") {
  CHECK(slurp(kData + "/trefoil.json") == complex_to_json(staircase(1)));
  CHECK(load_complex(kData + "/trefoil.json") == staircase(1));
}

TEST_CASE("round trip") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    const GradedComplex c = staircase(n);
    const GradedComplex back = parse_complex(complex_to_json(c));
    CHECK(back == c);
    CHECK(validate(back).empty());
  }
  const GradedComplex b = borromean::fixture();
  CHECK(parse_complex(complex_to_json(b)) == b);
}
