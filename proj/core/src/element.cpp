#include "dgq/element.hpp"

#include "dgq/errors.hpp"

namespace dgq {

Element::Element(Path p, Rational coeff) {
  if (coeff != 0) terms_.emplace(std::move(p), std::move(coeff));
}

Element Element::identity(const GradedQuiver& q) {
  Element e;
  for (VertexId v : q.vertices()) e.add_term(Path::idempotent(v), 1);
  return e;
}

void Element::add_term(const Path& p, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Element::coeff(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Element::hdeg() const {
  if (terms_.empty()) return std::nullopt;
  const int h = terms_.begin()->first.hdeg();
  for (const auto& [p, c] : terms_) {
    if (p.hdeg() != h) return std::nullopt;
  }
  return h;
}

std::optional<int> Element::adeg() const {
  if (terms_.empty()) return std::nullopt;
  const int a = terms_.begin()->first.adeg();
  for (const auto& [p, c] : terms_) {
    if (p.adeg() != a) return std::nullopt;
  }
  return a;
}

bool Element::is_hdeg_homogeneous() const { return terms_.empty() || hdeg().has_value(); }

Element& Element::operator+=(const Element& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

Element& Element::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

Element operator*(const Element& u, const Element& v) { return multiply(u, v); }

Element multiply(const Element& u, const Element& v) {
  Element out;
  for (const auto& [p, c] : u) {
    for (const auto& [q, d] : v) {
      if (auto pq = p.concat(q)) out.add_term(*pq, c * d);
    }
  }
  return out;
}

Element graded_commutator(const Element& u, const Element& v, int hu, int hv) {
  if (!u.is_zero() && u.hdeg() != hu) throw InvalidInput("graded_commutator: left argument not homogeneous of the stated degree");
  if (!v.is_zero() && v.hdeg() != hv) throw InvalidInput("graded_commutator: right argument not homogeneous of the stated degree");
  Element out = multiply(u, v);
  const bool odd = ((hu * hv) % 2) != 0;
  Element vu = multiply(v, u);
  if (odd) {
    out += vu;
  } else {
    out -= vu;
  }
  return out;
}

Element truncate_adams(const Element& u, int n) {
  Element out;
  for (const auto& [p, c] : u) {
    if (p.adeg() <= n) out.add_term(p, c);
  }
  return out;
}

}  // namespace dgq

namespace dgq {

Element transport(const Element& u, const GradedQuiver& target, const std::vector<std::optional<ArrowIndex>>& arrow_map) {
  Element out;
  std::vector<ArrowIndex> mapped;
  for (const auto& [p, c] : u) {
    if (!target.has_vertex(p.source()) || !target.has_vertex(p.target())) continue;
    mapped.clear();
    bool keep = true;
    for (ArrowIndex a : p.arrows()) {
      if (a >= arrow_map.size() || !arrow_map[a]) {
        keep = false;
        break;
      }
      mapped.push_back(*arrow_map[a]);
    }
    if (keep) out.add_term(Path::from_arrows(target, p.source(), mapped), c);
  }
  return out;
}

}  // namespace dgq
