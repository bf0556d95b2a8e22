#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace dgq;

namespace {

SplitModel split_of(int m, std::vector<int> w) {
  const McKayData d = McKayData::make(m, std::move(w));
  return split(delete_vertex(mckay_model(d), 0), d);
}

Subset without(int n, int i) { return full_subset(n) & ~(Subset{1} << (i - 1)); }

}  // namespace

TEST_CASE("closure holds exactly when the weights sum to m") {
  for (const auto& [m, w] : std::vector<std::pair<int, std::vector<int>>>{{3, {1, 1, 1}}, {4, {1, 1, 1, 1}}, {5, {1, 1, 1, 2}}, {5, {1, 2, 2}}}) {
    CAPTURE(m);
    CHECK(split_of(m, w).closure.passed);
  }
  const SplitModel bad = split_of(2, {1, 1, 1, 1});
  CHECK_FALSE(bad.closure.passed);
  CHECK(bad.closure.witness.find("x_1_1234_1") != std::string::npos);
  CHECK_FALSE(split_of(4, {1, 3, 1, 3}).closure.passed);
}

TEST_CASE("split classification for m = 3") {
  const SplitModel s = split_of(3, {1, 1, 1});
  CHECK(s.ascending_arrows().size() == 3);
  CHECK(s.descending_arrows().size() == 5);
  for (ArrowIndex a : s.ascending_arrows()) {
    CHECK(s.model.quiver().arrow(a).source == 1);
    CHECK(s.model.quiver().arrow(a).target == 2);
  }
  const DgModel asc = s.ascending_subalgebra();
  CHECK(asc.quiver().arrow_count() == 3);
  CHECK_THROWS_AS(split(mckay_model(McKayData::make(3, {1, 1, 1})), McKayData::make(3, {1, 1, 1})), InvalidInput);
}

TEST_CASE("the algebra C") {
  const PresentedAlgebra c3 = build_c(split_of(3, {1, 1, 1}));
  CHECK(c3.quiver.vertices() == std::vector<VertexId>{1, 2});
  CHECK(c3.quiver.arrow_count() == 3);
  CHECK(c3.relators.empty());
  const PresentedAlgebra c4 = build_c(split_of(4, {1, 1, 1, 1}));
  CHECK(c4.quiver.arrow_count() == 8);
  CHECK(c4.relators.size() == 6);
  CHECK_THROWS_AS(build_c(split_of(2, {1, 1, 1, 1})), InvalidInput);
}

TEST_CASE("C is Koszul with minimal model the ascending subalgebra, up to Adams degree 5") {
  for (const auto& [m, w] : std::vector<std::pair<int, std::vector<int>>>{{3, {1, 1, 1}}, {4, {1, 1, 1, 1}}, {5, {1, 1, 1, 2}}}) {
    CAPTURE(m);
    const SplitModel s = split_of(m, w);
    const CheckReport r = check_c_koszul_and_model(s, 5);
    CHECK(r.passed);
    CHECK(r.parts.size() == 2);
    // Independent count of the generator table against the dense J_n oracle.
    const PresentedAlgebra c = build_c(s);
    const QuadraticPresentation qp{c.quiver, c.relators};
    std::map<std::tuple<int, int, int>, std::size_t> gens, dense;
    for (const Arrow& a : s.ascending_subalgebra().quiver().arrows()) ++gens[{a.source, a.target, a.adeg}];
    for (int n = 1; n <= 4; ++n) {
      for (const auto& [st, d] : oracle::jn_dims(qp, n)) dense[{st.first, st.second, n}] = d;
    }
    CHECK(gens == dense);
  }
}

TEST_CASE("omega tilde has d^2 = 0 and the expected low generators") {
  for (const auto& [m, w] : std::vector<std::pair<int, std::vector<int>>>{{3, {1, 1, 1}}, {4, {1, 1, 1, 1}}, {5, {1, 1, 1, 2}}}) {
    const OmegaTilde ot = build_omega_tilde(split_of(m, w));
    CHECK(ot.d_squared.passed);
    const GradedQuiver& q = ot.extended.quiver();
    for (std::size_t g = 0; g < ot.generators.size(); ++g) {
      const auto key = ot.generator_keys[g];
      const Element& dx = ot.extended.differential.on_arrow(ot.generators[g]);
      if (key.subset == 0) {
        CHECK(dx.is_zero());
        CHECK(q.arrow(ot.generators[g]).hdeg == 0);
      }
      if (subset_size(key.subset) == 1) {
        // x̃_{j,∅} x_{j,i} − x_{j,i} x̃_{j+a_i,∅}
        CHECK(dx.size() == 2);
        for (const auto& [p, c] : dx) {
          CHECK(p.length() == 2);
          CHECK((c == 1 || c == -1));
        }
      }
    }
  }
  CHECK_THROWS_AS(build_omega_tilde(split_of(2, {1, 1, 1, 1})), InvalidInput);
}

TEST_CASE("omega for m = 3 pairs generators with descending arrows") {
  const SplitModel s = split_of(3, {1, 1, 1});
  const OmegaReport r = build_and_check_omega(s);
  CHECK(r.n == 3);
  CHECK(r.degree == -2);
  CHECK(r.degree_check.passed);
  CHECK(r.closed.passed);
  CHECK(r.nondegenerate.passed);
  CHECK(r.terms.size() == 5);
  const OmegaTilde ot = build_omega_tilde(s);
  const GradedQuiver& q = ot.extended.quiver();
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& t : r.terms) pairs.insert({q.arrow(t.tilde).id, q.arrow(t.dual).id});
  std::set<std::pair<std::string, std::string>> expect{{"xt_1_0_1", "x_1_123_1"}, {"xt_2_0_2", "x_2_123_2"}};
  for (int i = 1; i <= 3; ++i) {
    expect.insert({"xt_1_" + subset_string(Subset{1} << (i - 1)) + "_2", mckay_label(2, without(3, i), 1)});
  }
  CHECK(pairs == expect);
}

TEST_CASE("omega checks for m = 4 and m = 5") {
  for (const auto& [m, w] : std::vector<std::pair<int, std::vector<int>>>{{4, {1, 1, 1, 1}}, {5, {1, 1, 1, 2}}}) {
    const OmegaReport r = build_and_check_omega(split_of(m, w));
    CHECK(r.degree == 1 - static_cast<int>(w.size()));
    CHECK(r.passed());
  }
}

TEST_CASE("omega is refused unless the weights sum to m") {
  const McKayData gcd = McKayData::make(4, {2, 1, 1});
  CHECK_THROWS_AS(build_and_check_omega(split(delete_vertex(mckay_model(gcd), 0), gcd)), InvalidInput);
  try {
    build_and_check_omega(split_of(2, {1, 1, 1, 1}));
    FAIL("expected a refusal");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("sum(a_i) = m") != std::string::npos);
  }
}

TEST_CASE("a corrupted sign breaks closedness of omega") {
  // Flip the sign of one term in d of a loop: d^2 still holds on the
  // ascending side but the pairing is no longer a cycle.
  const McKayData d = McKayData::make(3, {1, 1, 1});
  DgModel del = delete_vertex(mckay_model(d), 0);
  std::vector<Element> images = del.differential.images();
  const ArrowIndex loop = del.quiver().index_of("x_1_123_1");
  images[loop] *= Rational(-1);
  del.differential = Differential(del.quiver(), images);
  const OmegaReport r = build_and_check_omega(split(del, d));
  CHECK_FALSE(r.closed.passed);
  CHECK_FALSE(r.closed.witness.empty());
}
