#pragma once

#include "dgq/dgq.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fixture {

inline dgq::Path word(const dgq::GradedQuiver& q, dgq::VertexId start, std::initializer_list<std::string> ids) {
  std::vector<dgq::ArrowIndex> w;
  for (const auto& id : ids) w.push_back(q.index_of(id));
  return dgq::Path::from_arrows(q, start, w);
}

/// Single term c·(path given by arrow ids), starting at the first arrow's source.
inline dgq::Element term(const dgq::GradedQuiver& q, std::initializer_list<std::string> ids, dgq::Rational c = 1) {
  const dgq::VertexId start = q.arrow(q.index_of(*ids.begin())).source;
  return dgq::Element(word(q, start, ids), c);
}

/// Two vertices, p, q : 0 → 1 and r, s : 1 → 0.
inline dgq::GradedQuiver conifold_quiver() {
  dgq::GradedQuiver q({0, 1});
  q.add_arrow("p", 0, 1, 0, 1);
  q.add_arrow("q", 0, 1, 0, 1);
  q.add_arrow("r", 1, 0, 0, 1);
  q.add_arrow("s", 1, 0, 0, 1);
  return q;
}

/// w = psqr − prqs.
inline dgq::Superpotential conifold() {
  const dgq::GradedQuiver q = conifold_quiver();
  return dgq::Superpotential::make(q, term(q, {"p", "s", "q", "r"}) - term(q, {"p", "r", "q", "s"}));
}

}  // namespace fixture
