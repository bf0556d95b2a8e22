#include "dgq/ginzburg.hpp"

#include "dgq/errors.hpp"

#include <algorithm>

namespace dgq {

namespace {

Path least_rotation(const GradedQuiver& q, const Path& p) {
  const auto& arrows = p.arrows();
  std::vector<ArrowIndex> best = arrows;
  std::vector<ArrowIndex> rot(arrows.size());
  for (std::size_t k = 1; k < arrows.size(); ++k) {
    std::rotate_copy(arrows.begin(), arrows.begin() + k, arrows.end(), rot.begin());
    if (rot < best) best = rot;
  }
  return Path::from_arrows(q, q.arrow(best.front()).source, best);
}

}  // namespace

Element normalize_cycles(const GradedQuiver& q, const Element& w) {
  Element out;
  for (const auto& [p, c] : w) {
    if (!p.is_cycle() || p.is_idempotent()) throw InvalidInput("superpotential term is not a cycle of positive length");
    out.add_term(least_rotation(q, p), c);
  }
  return out;
}

Superpotential Superpotential::make(GradedQuiver quiver, const Element& w, std::optional<int> weight) {
  for (const auto& a : quiver.arrows()) {
    if (a.hdeg != 0) throw InvalidInput("superpotential quiver arrow '" + a.id + "' must have homological degree 0");
  }
  Element normalized = normalize_cycles(quiver, w);
  std::optional<int> w_adeg = normalized.adeg();
  if (normalized.is_zero()) {
    w_adeg = weight.value_or(kDefaultPotentialWeight);
  } else if (weight && w_adeg && *weight != *w_adeg) {
    throw InvalidInput("requested Adams weight does not match the superpotential");
  } else if (weight && !w_adeg) {
    throw InvalidInput("Adams weight requested for an inhomogeneous superpotential");
  }
  return Superpotential{std::move(quiver), std::move(normalized), w_adeg};
}

Element cyclic_derivative(const GradedQuiver& q, const Element& w, ArrowIndex a) {
  Element out;
  const Arrow& arr = q.arrow(a);
  for (const auto& [p, c] : w) {
    if (!p.is_cycle()) throw InvalidInput("cyclic_derivative: term is not a cycle");
    const auto& arrows = p.arrows();
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (arrows[i] != a) continue;
      // v u with p = u a v.
      std::vector<ArrowIndex> vu(arrows.begin() + i + 1, arrows.end());
      vu.insert(vu.end(), arrows.begin(), arrows.begin() + i);
      out.add_term(Path::from_arrows(q, arr.target, vu), c);
    }
  }
  return out;
}

Element cyclic_derivative(const Superpotential& w, ArrowIndex a) { return cyclic_derivative(w.quiver, w.w, a); }

Element GinzburgModel::central_loop() const {
  Element c;
  for (ArrowIndex l : loop) c.add_term(Path::arrow(model.quiver(), l), 1);
  return c;
}

GinzburgModel ginzburg_model(const Superpotential& w) {
  const GradedQuiver& base = w.quiver;
  bool graded = w.adams_weight.has_value();
  if (graded) {
    for (const auto& a : base.arrows()) {
      if (*w.adams_weight - a.adeg < 1) graded = false;
    }
  }
  const int weight = w.adams_weight.value_or(0);

  GradedQuiver q(base.vertices());
  std::vector<std::optional<ArrowIndex>> embed(base.arrow_count());
  for (ArrowIndex a = 0; a < base.arrow_count(); ++a) embed[a] = q.add_arrow(base.arrow(a));
  GinzburgModel g;
  for (ArrowIndex a = 0; a < base.arrow_count(); ++a) {
    const Arrow& arr = base.arrow(a);
    const std::string id = arr.id + "*";
    g.star.push_back(q.add_arrow(Arrow{id, arr.target, arr.source, -1, graded ? weight - arr.adeg : 1, arr.label + "*"}));
  }
  for (VertexId v : base.vertices()) {
    const std::string id = "c" + std::to_string(v);
    g.loop.push_back(q.add_arrow(Arrow{id, v, v, -2, graded ? weight : 1, id}));
  }

  std::vector<Element> images(q.arrow_count());
  for (ArrowIndex a = 0; a < base.arrow_count(); ++a) {
    images[g.star[a]] = transport(cyclic_derivative(w, a), q, embed);
  }
  for (std::size_t k = 0; k < base.vertices().size(); ++k) {
    const VertexId v = base.vertices()[k];
    Element dc;
    for (ArrowIndex a = 0; a < base.arrow_count(); ++a) {
      const Element as(Path::arrow(q, g.star[a]));
      const Element ar(Path::arrow(q, *embed[a]));
      dc += graded_commutator(as, ar, -1, 0);
    }
    const Element ev = Element::idempotent(v);
    images[g.loop[k]] = ev * dc * ev;
  }
  g.model = DgModel{Differential(std::move(q), std::move(images)), Provenance::ginzburg, std::nullopt, graded};
  return g;
}

PresentedAlgebra jacobian_presentation(const Superpotential& w) {
  PresentedAlgebra p{w.quiver, {}};
  for (ArrowIndex a = 0; a < w.quiver.arrow_count(); ++a) {
    Element r = cyclic_derivative(w, a);
    if (!r.is_zero()) p.relators.push_back(std::move(r));
  }
  return p;
}

Superpotential restrict_potential(const Superpotential& w, VertexId v) {
  const GradedQuiver& old = w.quiver;
  if (!old.has_vertex(v)) throw InvalidInput("restrict_potential: unknown vertex " + std::to_string(v));
  std::vector<VertexId> vertices;
  for (VertexId u : old.vertices()) {
    if (u != v) vertices.push_back(u);
  }
  GradedQuiver q(vertices);
  std::vector<std::optional<ArrowIndex>> map(old.arrow_count());
  for (ArrowIndex a = 0; a < old.arrow_count(); ++a) {
    const Arrow& arr = old.arrow(a);
    if (arr.source != v && arr.target != v) map[a] = q.add_arrow(arr);
  }
  Element w0 = transport(w.w, q, map);
  Superpotential out{std::move(q), Element{}, w.adams_weight};
  out.w = normalize_cycles(out.quiver, w0);
  return out;
}

}  // namespace dgq
