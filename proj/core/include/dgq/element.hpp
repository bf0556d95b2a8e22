#pragma once

#include "dgq/path.hpp"
#include "dgq/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dgq {

/// A finite rational combination of paths, stored sparsely in canonical path
/// order. Zero coefficients are never stored. Paths with different endpoints
/// may coexist in one element.
class Element {
 public:
  using Terms = std::map<Path, Rational>;
  using const_iterator = Terms::const_iterator;

  Element() = default;
  explicit Element(Path p, Rational coeff = 1);
  static Element idempotent(VertexId v) { return Element(Path::idempotent(v)); }
  /// Σ_v e_v over the vertices of q.
  static Element identity(const GradedQuiver& q);

  void add_term(const Path& p, const Rational& coeff);
  Rational coeff(const Path& p) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  /// Common homological degree of all terms, if any. The zero element is
  /// homogeneous of every degree and reports nullopt together with is_zero().
  std::optional<int> hdeg() const;
  std::optional<int> adeg() const;
  bool is_hdeg_homogeneous() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& scalar);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend Element operator*(Element a, const Rational& s) { return a *= s; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator*(const Element& u, const Element& v);
  friend bool operator==(const Element&, const Element&) = default;

 private:
  Terms terms_;
};

/// Bilinear extension of path concatenation; mismatched endpoints give zero.
Element multiply(const Element& u, const Element& v);

/// uv − (−1)^{hu·hv} vu. Throws InvalidInput unless u (resp. v) is homogeneous
/// of homological degree hu (resp. hv); zero is accepted at any degree.
Element graded_commutator(const Element& u, const Element& v, int hu, int hv);

/// Drops every path of Adams degree > n.
Element truncate_adams(const Element& u, int n);

}  // namespace dgq

namespace dgq {

/// Re-expresses `u` over `target`, sending arrow i to arrow_map[i]. Terms that
/// use an unmapped arrow, or sit at a vertex missing from `target`, are dropped.
Element transport(const Element& u, const GradedQuiver& target, const std::vector<std::optional<ArrowIndex>>& arrow_map);

}  // namespace dgq
