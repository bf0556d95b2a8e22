#include "fixtures.hpp"

#include <doctest.h>

using namespace dgq;

namespace {

template <class T, class F, class G>
void round_trip(const T& value, F to, G from) {
  const std::string first = io::dump(to(value));
  const auto parsed = from(io::parse(first));
  CHECK(io::dump(to(parsed)) == first);
}

}  // namespace

TEST_CASE("model round trips are byte-identical") {
  const auto to = [](const DgModel& m) { return io::to_json(m); };
  const auto from = [](const io::Json& j) { return io::model_from_json(j); };
  round_trip(polynomial_model(3), to, from);
  round_trip(delete_vertex(mckay_model(McKayData::make(2, {1, 1, 1, 1})), 0), to, from);
  round_trip(ginzburg_model(fixture::conifold()).model, to, from);
  round_trip(minimal_model_general(polynomial_presentation(2), 3), to, from);
  const DgModel m = mckay_model(McKayData::make(3, {1, 1, 1}));
  CHECK(io::model_from_json(io::to_json(m)) == m);
}

TEST_CASE("report round trips are byte-identical") {
  const auto to = [](const CheckReport& r) { return io::to_json(r); };
  const auto from = [](const io::Json& j) { return io::report_from_json(j); };
  round_trip(check_d_squared(polynomial_model(3).differential, 3), to, from);
  CheckReport nested = CheckReport::fail("outer", "first failure", "scope note");
  nested.parts = {CheckReport::pass("inner"), CheckReport::fail("inner2", "w")};
  round_trip(nested, to, from);
  const io::Json j = io::to_json(CheckReport::pass("x"));
  CHECK(j.dump() == R"({"check":"x","status":"pass"})");
}

TEST_CASE("elements serialise with exact rational strings") {
  const DgModel m = polynomial_model(2);
  const GradedQuiver& q = m.quiver();
  Element u = fixture::term(q, {"x1", "x2"}, fraction(-3, 6));
  u.add_term(Path::idempotent(0), 2);
  const io::Json j = io::to_json(u, q);
  CHECK(j.dump() == R"([{"path":[],"start":0,"coeff":"2"},{"path":["x1","x2"],"start":0,"coeff":"-1/2"}])");
  CHECK(io::element_from_json(j, q) == u);
}

TEST_CASE("potentials and quivers from files") {
  const GradedQuiver q = io::quiver_from_json(io::read_file(std::string(DGQ_TEST_DATA) + "/conifold_quiver.json"));
  CHECK(q == fixture::conifold_quiver());
  const Superpotential w = io::potential_from_json(io::read_file(std::string(DGQ_TEST_DATA) + "/conifold_potential.json"), q);
  CHECK(w == fixture::conifold());
  CHECK(io::potential_from_json(io::potential_to_json(w), q) == w);
}

TEST_CASE("malformed input is rejected as invalid") {
  CHECK_THROWS_AS(io::parse("{"), InvalidInput);
  CHECK_THROWS_AS(io::model_from_json(io::parse("{}")), InvalidInput);
  CHECK_THROWS_AS(io::quiver_from_json(io::parse(R"({"vertices": "x"})")), InvalidInput);
  CHECK_THROWS_AS(io::quiver_from_json(io::parse(R"({"vertices": [0], "arrows": [{"id": "a", "source": 0, "target": 3}]})")), InvalidInput);
  const GradedQuiver q = fixture::conifold_quiver();
  CHECK_THROWS_AS(io::element_from_json(io::parse(R"([{"path": ["p"], "coeff": "0.5"}])"), q), InvalidInput);
  CHECK_THROWS_AS(io::element_from_json(io::parse(R"([{"path": ["p", "q"], "coeff": "1"}])"), q), InvalidInput);
  CHECK_THROWS_AS(io::element_from_json(io::parse(R"([{"path": ["zz"], "coeff": "1"}])"), q), InvalidInput);
  CHECK_THROWS_AS(io::potential_from_json(io::parse(R"([{"coeff": "1", "cycle": ["p", "q"]}])"), q), InvalidInput);
  CHECK_THROWS_AS(io::map_from_json(io::parse(R"({"vertices": {"a": 1}})")), InvalidInput);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), InvalidInput);
  CHECK_THROWS_AS(io::report_from_json(io::parse(R"({"check": "x", "status": "maybe"})")), InvalidInput);
}

TEST_CASE("generator maps") {
  const GeneratorMap m = io::map_from_json(io::parse(R"({"arrows": {"a": "b"}, "vertices": {"1": 2}})"));
  CHECK(m.arrows.at("a") == "b");
  CHECK(m.vertices.at(1) == 2);
  CHECK(io::map_from_json(io::to_json(m)).arrows == m.arrows);
}
