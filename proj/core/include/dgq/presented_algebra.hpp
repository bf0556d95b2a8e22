#pragma once

#include "dgq/element.hpp"

#include <vector>

namespace dgq {

/// kQ modulo the two-sided ideal generated by `relators`. Relators may have
/// any length (idempotents included) but each must be component-pure and
/// Adams-homogeneous; arrows must sit in homological degree 0.
struct PresentedAlgebra {
  GradedQuiver quiver;
  std::vector<Element> relators;

  /// Throws InvalidInput when an invariant fails.
  void validate() const;
};

}  // namespace dgq
