#include "oracles.hpp"

#include <doctest.h>

using namespace dgq;

namespace {

GradedQuiver two_loops() {
  GradedQuiver q({1});
  q.add_arrow("x", 1, 1, 0, 1);
  q.add_arrow("y", 1, 1, -1, 2);
  return q;
}

Path word(const GradedQuiver& q, VertexId s, std::initializer_list<const char*> ids) {
  std::vector<ArrowIndex> w;
  for (const char* id : ids) w.push_back(q.index_of(id));
  return Path::from_arrows(q, s, w);
}

}  // namespace

TEST_CASE("rationals print reduced and parse strictly") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-2, 1)) == "-2");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational("+7") == 7);
  for (const char* bad : {"", "1.5", "1e3", "3/0", "3/-2", "/2", "a", "1/2/3"}) {
    CHECK_THROWS_AS(parse_rational(bad), InvalidInput);
  }
}

TEST_CASE("quiver construction validates arrows") {
  GradedQuiver q({0, 1});
  CHECK(q.add_arrow("a", 0, 1, 0, 1) == 0);
  CHECK_THROWS_AS(q.add_arrow("a", 0, 1, 0, 1), InvalidInput);
  CHECK_THROWS_AS(q.add_arrow("b", 0, 7, 0, 1), InvalidInput);
  CHECK_THROWS_AS(q.add_arrow("c", 0, 1, 1, 1), InvalidInput);
  CHECK_THROWS_AS(q.add_arrow("d", 0, 1, 0, 0), InvalidInput);
  CHECK_THROWS_AS(GradedQuiver({0, 0}), InvalidInput);
  CHECK(q.arrow(0).label == "a");
  CHECK(q.find("zz") == std::nullopt);
  CHECK_THROWS_AS(q.index_of("zz"), InvalidInput);
}

TEST_CASE("paths compose left to right and carry additive degrees") {
  GradedQuiver q({0, 1, 2});
  q.add_arrow("a", 0, 1, 0, 1);
  q.add_arrow("b", 1, 2, -1, 2);
  const Path ab = word(q, 0, {"a", "b"});
  CHECK(ab.source() == 0);
  CHECK(ab.target() == 2);
  CHECK(ab.hdeg() == -1);
  CHECK(ab.adeg() == 3);
  CHECK_THROWS_AS(word(q, 0, {"b"}), InvalidInput);
  CHECK_FALSE(Path::arrow(q, 1).concat(Path::arrow(q, 0)));
  CHECK(*Path::arrow(q, 0).concat(Path::arrow(q, 1)) == ab);
  CHECK(*Path::idempotent(0).concat(ab) == ab);
  CHECK(*ab.concat(Path::idempotent(2)) == ab);
  CHECK(ab.slice(q, 1, 2) == Path::arrow(q, 1));
  CHECK(ab.slice(q, 1, 1) == Path::idempotent(1));
}

TEST_CASE("mismatched endpoints multiply to zero") {
  GradedQuiver q({0, 1});
  q.add_arrow("a", 0, 1, 0, 1);
  const Element a(Path::arrow(q, 0));
  CHECK((a * a).is_zero());
  CHECK((Element::idempotent(1) * a).is_zero());
  CHECK(Element::idempotent(0) * a == a);
  CHECK(a * Element::idempotent(1) == a);
}

TEST_CASE("zero coefficients are never stored") {
  const GradedQuiver q = two_loops();
  Element u(Path::arrow(q, 0), 3);
  u.add_term(Path::arrow(q, 0), -3);
  CHECK(u.is_zero());
  CHECK(u.size() == 0);
  CHECK((Element(Path::arrow(q, 0)) * Rational(0)).is_zero());
}

TEST_CASE("graded commutator of odd elements is symmetric") {
  const GradedQuiver q = two_loops();
  const Element x(Path::arrow(q, 0)), y(Path::arrow(q, 1));
  const Element yy = graded_commutator(y, y, -1, -1);
  CHECK(yy == Element(word(q, 1, {"y", "y"}), 2));
  Element xy = graded_commutator(x, y, 0, -1);
  Element expect(word(q, 1, {"x", "y"}));
  expect.add_term(word(q, 1, {"y", "x"}), -1);
  CHECK(xy == expect);
  CHECK_THROWS_AS(graded_commutator(x + y, y, 0, -1), InvalidInput);
}

TEST_CASE("element identity, associativity and antisymmetry on random inputs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    GradedQuiver q({0, 1, 2});
    std::uniform_int_distribution<int> v(0, 2), h(-2, 0), a(1, 3);
    for (int i = 0; i < 4; ++i) {
      const int hd = h(rng);
      q.add_arrow("a" + std::to_string(i), v(rng), v(rng), hd, std::max(a(rng), -hd));
    }
    const Element x = oracle::random_element(rng, q, 2, std::nullopt, 4);
    const Element y = oracle::random_element(rng, q, 2, std::nullopt, 4);
    const Element z = oracle::random_element(rng, q, 2, std::nullopt, 4);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(Element::identity(q) * x == x);
    CHECK(x * Element::identity(q) == x);
    for (int hu : {-2, -1, 0}) {
      for (int hv : {-2, -1, 0}) {
        const Element u = oracle::random_element(rng, q, 2, hu, 3);
        const Element w = oracle::random_element(rng, q, 2, hv, 3);
        const Rational sign = (hu * hv) % 2 == 0 ? 1 : -1;
        CHECK(graded_commutator(u, w, hu, hv) == -sign * graded_commutator(w, u, hv, hu));
      }
    }
  }
}

TEST_CASE("homogeneity queries") {
  const GradedQuiver q = two_loops();
  Element u(Path::arrow(q, 0));
  CHECK(u.hdeg() == 0);
  CHECK(u.adeg() == 1);
  u.add_term(Path::arrow(q, 1), 1);
  CHECK_FALSE(u.hdeg());
  CHECK_FALSE(u.is_hdeg_homogeneous());
  CHECK(Element{}.is_hdeg_homogeneous());
  CHECK(truncate_adams(u, 1) == Element(Path::arrow(q, 0)));
}

TEST_CASE("transport drops terms through removed arrows") {
  GradedQuiver q({0, 1});
  q.add_arrow("a", 0, 1, 0, 1);
  q.add_arrow("b", 1, 1, 0, 1);
  GradedQuiver r({1});
  r.add_arrow("b", 1, 1, 0, 1);
  Element u(word(q, 0, {"a", "b"}));
  u.add_term(word(q, 1, {"b", "b"}), 2);
  u.add_term(Path::idempotent(0), 1);
  const Element t = transport(u, r, {std::nullopt, ArrowIndex{0}});
  CHECK(t == Element(word(r, 1, {"b", "b"}), 2));
}

TEST_CASE("canonical path order is by length first") {
  const GradedQuiver q = two_loops();
  CHECK(Path::idempotent(1) < Path::arrow(q, 1));
  CHECK(Path::arrow(q, 1) < word(q, 1, {"x", "x"}));
  CHECK(word(q, 1, {"x", "y"}) < word(q, 1, {"y", "x"}));
}
