#include "doctest.h"

#include "gakit/error.hpp"
#include "gakit/json_io.hpp"
#include "gakit/sampling.hpp"

using namespace gakit;
using json_io::json;

TEST_SUITE("json") {

TEST_CASE("multivector round trip") {
  Sampler s(1);
  const Multivector x = s.multivector(4);
  CHECK(json_io::multivector_from_json(json_io::multivector_to_json(x)) == x);
  const json j = json_io::parse_document(R"({"n": 3, "terms": [{"blade": [1, 2], "coeff": 1.5}, {"blade": [], "coeff": 2}]})");
  const Multivector y = json_io::multivector_from_json(j);
  CHECK(y[0] == 2.0);
  CHECK(y[0b11] == 1.5);
}

TEST_CASE("malformed multivectors") {
  CHECK_THROWS_AS(json_io::multivector_from_json(json_io::parse_document(R"({"n": 3, "terms": [{"blade": [2, 1], "coeff": 1}]})")),
                  ArgumentError);
  CHECK_THROWS_AS(json_io::multivector_from_json(json_io::parse_document(
                      R"({"n": 3, "terms": [{"blade": [1], "coeff": 1}, {"blade": [1], "coeff": 2}]})")),
                  ArgumentError);
  CHECK_THROWS_AS(json_io::multivector_from_json(json_io::parse_document(R"({"n": 3, "terms": [{"blade": [4], "coeff": 1}]})")),
                  ArgumentError);
  CHECK_THROWS_AS(json_io::multivector_from_json(json_io::parse_document(R"({"terms": []})")), ArgumentError);
  CHECK_THROWS_AS(json_io::parse_document("{not json"), ArgumentError);
}

TEST_CASE("metric documents") {
  const MetricTensor g = json_io::metric_from_json(json_io::parse_document(R"({"n": 2, "matrix": [[1, 0.5], [0.5, -2]]})"));
  CHECK(g(0, 1) == 0.5);
  CHECK(json_io::metric_from_json(json_io::metric_to_json(g)).matrix() == g.matrix());
  CHECK_THROWS_AS(json_io::metric_from_json(json_io::parse_document(R"({"n": 2, "matrix": [[1, 0.5], [0, 1]]})")), ArgumentError);
  CHECK_THROWS_AS(json_io::metric_from_json(json_io::parse_document(R"({"n": 2, "matrix": [[1, 1], [1, 1]]})")), DegeneracyError);
  CHECK_THROWS_AS(json_io::metric_from_json(json_io::parse_document(R"({"n": 2, "matrix": [[1, 0]]})")), ArgumentError);
}

TEST_CASE("operator documents list images as rows") {
  const LinOp11 t = json_io::linop_from_json(json_io::parse_document(R"({"n": 2, "matrix": [[0, 1], [-1, 0]]})"));
  CHECK(t.image(0) == Vector{0, 1});
  CHECK(t.image(1) == Vector{-1, 0});
  const json back = json_io::linop_to_json(t);
  CHECK(back["matrix"] == json::parse("[[0.0, 1.0], [-1.0, 0.0]]"));
}

} // TEST_SUITE
