#pragma once

#include "dgq/koszul.hpp"
#include "dgq/presented_algebra.hpp"

#include <optional>

namespace dgq {

/// Adams weight given to the zero potential when none is requested.
inline constexpr int kDefaultPotentialWeight = 3;

/// A quiver with superpotential. `w` is stored normalised: every cycle rotated
/// to its lexicographically least arrow sequence and like terms merged.
struct Superpotential {
  GradedQuiver quiver;
  Element w;
  /// Adams degree of every cycle of w when w is homogeneous (or the requested
  /// weight for w = 0); nullopt for inhomogeneous w.
  std::optional<int> adams_weight;

  /// Validates (arrows in hdeg 0, every term a cycle of length ≥ 1) and
  /// normalises. `weight`, when given, must agree with a homogeneous w.
  static Superpotential make(GradedQuiver quiver, const Element& w, std::optional<int> weight = std::nullopt);

  friend bool operator==(const Superpotential&, const Superpotential&) = default;
};

/// Rotates every cycle of w to its least rotation and merges terms.
Element normalize_cycles(const GradedQuiver& q, const Element& w);

/// ∂w/∂a: for each term c·p of w and each occurrence p = u a v, adds c·(v u).
/// Works on any combination of cycles, normalised or not.
Element cyclic_derivative(const GradedQuiver& q, const Element& w, ArrowIndex a);
Element cyclic_derivative(const Superpotential& w, ArrowIndex a);

/// Γ(Q, w): arrows a (hdeg 0), a* reversed (hdeg −1), a loop c_v per vertex
/// (hdeg −2); da = 0, da* = ∂w/∂a, dc_v = e_v (Σ_a [a*, a]) e_v.
struct GinzburgModel {
  DgModel model;
  std::vector<ArrowIndex> star;  ///< star[a] = index of a* in the model quiver
  std::vector<ArrowIndex> loop;  ///< loop[k] = c at the k-th vertex

  /// c = Σ_v c_v.
  Element central_loop() const;
};

/// When w has Adams weight W with W > adeg(a) for all a, a* gets W − adeg(a)
/// and c gets W so that d is Adams-homogeneous. Otherwise every new arrow gets
/// Adams degree 1 and the model is marked not Adams-graded.
GinzburgModel ginzburg_model(const Superpotential& w);

/// kQ / ⟨∂w/∂a : a ∈ Q1⟩ (zero derivatives omitted).
PresentedAlgebra jacobian_presentation(const Superpotential& w);

/// (Q⁰, w⁰): v and its arrows removed, cycles through v dropped. The Adams
/// weight is kept so that the restricted Ginzburg model matches the deleted one.
Superpotential restrict_potential(const Superpotential& w, VertexId v);

}  // namespace dgq
