#pragma once

#include "dgq/element.hpp"
#include "dgq/quiver.hpp"
#include "dgq/report.hpp"

#include <vector>

namespace dgq {

/// A differential on the path algebra of a graded quiver, given by its values
/// on arrows and extended to paths by the graded Leibniz rule
///
///   d(a1…ak) = Σ_i (−1)^{hdeg(a1…a_{i−1})} a1…a_{i−1}·d(a_i)·a_{i+1}…ak,
///
/// with d(e_v) = 0.
class Differential {
 public:
  Differential() = default;
  /// `images[i]` is d of arrow i. Throws InvalidInput on a size mismatch.
  Differential(GradedQuiver quiver, std::vector<Element> images);
  /// Zero differential.
  explicit Differential(GradedQuiver quiver);

  const GradedQuiver& quiver() const { return quiver_; }
  const Element& on_arrow(ArrowIndex a) const { return images_.at(a); }
  const std::vector<Element>& images() const { return images_; }

  friend bool operator==(const Differential&, const Differential&) = default;

 private:
  GradedQuiver quiver_;
  std::vector<Element> images_;
};

/// d applied to a single path.
Element apply(const Differential& d, const Path& p);
/// d applied to an hdeg-homogeneous element; throws InvalidInput otherwise.
Element apply(const Differential& d, const Element& u);

/// d(d(a)) for every arrow, truncated to Adams degree ≤ max_adams. Passing on
/// generators implies d² = 0 on the whole algebra by the Leibniz rule.
/// Throws InvalidInput if max_adams is below the largest arrow Adams degree.
CheckReport check_d_squared(const Differential& d, int max_adams);

/// Per arrow: every path of d(a) runs from source(a) to target(a), has
/// hdeg(a)+1, has length ≥ 2 (minimality) and, when `adams_graded`, Adams
/// degree adeg(a).
CheckReport check_grading(const Differential& d, bool adams_graded = true);

}  // namespace dgq
