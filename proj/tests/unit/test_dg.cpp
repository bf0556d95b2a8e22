#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace dgq;
using fixture::term;

namespace {

// d(uv) = d(u)v + (−1)^{|u|} u d(v) on random homogeneous u, v.
void check_leibniz(const DgModel& m, std::mt19937& rng, int trials) {
  const GradedQuiver& q = m.quiver();
  std::uniform_int_distribution<int> hd(q.min_hdeg() * 2, 0);
  for (int t = 0; t < trials; ++t) {
    const int hu = hd(rng), hv = hd(rng);
    const Element u = oracle::random_element(rng, q, 2, hu, 3);
    const Element v = oracle::random_element(rng, q, 2, hv, 3);
    const Rational sign = hu % 2 == 0 ? 1 : -1;
    CHECK(apply(m.differential, u * v) == apply(m.differential, u) * v + sign * (u * apply(m.differential, v)));
    const Element du = apply(m.differential, u);
    if (!du.is_zero()) {
      CHECK(du.hdeg() == hu + 1);
      CHECK(apply(m.differential, du).is_zero());
    }
  }
}

}  // namespace

TEST_CASE("d of an idempotent vanishes") {
  const DgModel m = polynomial_model(2);
  CHECK(apply(m.differential, Element::idempotent(0)).is_zero());
}

TEST_CASE("Leibniz on products in the polynomial model") {
  const DgModel m = polynomial_model(3);
  const GradedQuiver& q = m.quiver();
  CHECK(apply(m.differential, term(q, {"x1", "x23"})) == term(q, {"x1", "x2", "x3"}) - term(q, {"x1", "x3", "x2"}));
  CHECK(apply(m.differential, term(q, {"x12", "x3"})) == term(q, {"x1", "x2", "x3"}) - term(q, {"x2", "x1", "x3"}));
  CHECK_THROWS_AS(apply(m.differential, term(q, {"x1"}) + term(q, {"x12"})), InvalidInput);
}

TEST_CASE("graded Leibniz rule and d^2 = 0 on random elements") {
  std::mt19937 rng(3);
  check_leibniz(polynomial_model(3), rng, 300);
  check_leibniz(polynomial_model(4), rng, 100);
  check_leibniz(mckay_model(McKayData::make(3, {1, 1, 1})), rng, 300);
  check_leibniz(ginzburg_model(fixture::conifold()).model, rng, 300);
}

TEST_CASE("d squared passes on generators and reports the Leibniz argument") {
  const CheckReport r = check_d_squared(polynomial_model(3).differential, 3);
  CHECK(r.passed);
  CHECK(r.note.find("Leibniz") != std::string::npos);
  CHECK(check_d_squared(delete_vertex(mckay_model(McKayData::make(2, {1, 1, 1, 1})), 0).differential, 4).passed);
  CHECK_THROWS_AS(check_d_squared(polynomial_model(3).differential, 2), InvalidInput);
}

TEST_CASE("a flipped sign in d x123 is caught") {
  const DgModel m = polynomial_model(3);
  const GradedQuiver& q = m.quiver();
  std::vector<Element> images = m.differential.images();
  const ArrowIndex x123 = q.index_of("x123");
  const Path first = images[x123].begin()->first;
  images[x123].add_term(first, -2 * images[x123].coeff(first));
  const CheckReport r = check_d_squared(Differential(q, images), 3);
  CHECK_FALSE(r.passed);
  CHECK(r.witness.find("x123") != std::string::npos);
}

TEST_CASE("grading check") {
  CHECK(check_grading(polynomial_model(4).differential).passed);
  CHECK(check_grading(ginzburg_model(fixture::conifold()).model.differential).passed);

  GradedQuiver q({0, 1});
  q.add_arrow("a", 0, 1, 0, 1);
  q.add_arrow("b", 0, 1, 0, 1);
  q.add_arrow("t", 0, 1, -1, 1);
  q.add_arrow("u", 0, 1, -1, 2);
  q.add_arrow("l", 0, 0, 0, 1);
  auto with = [&](const char* id, Element img) {
    std::vector<Element> images(q.arrow_count());
    images[q.index_of(id)] = std::move(img);
    return check_grading(Differential(q, images));
  };
  const CheckReport length_one = with("t", term(q, {"a"}));
  CHECK_FALSE(length_one.passed);
  CHECK(length_one.witness.find("t") != std::string::npos);
  CHECK_FALSE(with("u", term(q, {"l", "a"}) + term(q, {"b"})).passed);     // length one
  CHECK_FALSE(with("t", term(q, {"l", "a"})).passed);                      // Adams degree 2 ≠ 1
  CHECK_FALSE(with("u", term(q, {"l", "l"})).passed);                      // wrong target
  CHECK_FALSE(with("a", term(q, {"l", "a"})).passed);                      // hdeg 0 + 1 ≠ 0
  CHECK(with("u", term(q, {"l", "a"})).passed);
}
