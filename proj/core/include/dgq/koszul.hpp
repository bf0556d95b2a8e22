#pragma once

#include "dgq/differential.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dgq {

/// Subset of [n] = {1..n} as a bitmask: bit i−1 set iff i ∈ S.
using Subset = std::uint32_t;

inline int subset_size(Subset s) { return __builtin_popcount(s); }
inline Subset full_subset(int n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }
/// Elements in ascending order: "134"; "1.10.12" once an element exceeds 9;
/// "0" for the empty set.
std::string subset_string(Subset s);
/// Nonempty subsets of [n] ordered by size, then lexicographically.
std::vector<Subset> ordered_subsets(int n);

/// The shuffle sign ε_{A,B} for disjoint A, B: the sign of the permutation
/// that merges A-then-B into ascending order, i.e. (−1)^{#{(a,b): a > b}}.
int shuffle_sign(Subset a, Subset b);

enum class Provenance { general, polynomial, mckay, ginzburg, custom };
std::string to_string(Provenance p);
Provenance parse_provenance(std::string_view s);

/// A DG path algebra (kQ, d) together with how it was produced.
struct DgModel {
  Differential differential;
  Provenance provenance = Provenance::custom;
  /// Set when generators were only produced up to this Adams degree.
  std::optional<int> truncated_at{};
  /// False when d only respects the homological grading (Adams degrees then
  /// stand for path length and are not preserved by d).
  bool adams_graded = true;

  const GradedQuiver& quiver() const { return differential.quiver(); }
  friend bool operator==(const DgModel&, const DgModel&) = default;
};
using MinimalModel = DgModel;

/// T_l V/(R): arrows span V (hdeg 0, adeg 1), relators span R ⊆ V⊗_l V.
struct QuadraticPresentation {
  GradedQuiver quiver;
  std::vector<Element> relators;

  /// Throws InvalidInput unless every arrow is (0, 1) and every relator is a
  /// nonzero combination of length-2 paths with common endpoints.
  void validate() const;
};

/// k[x1..xn] as T(V)/(x_i x_j − x_j x_i) on one vertex.
QuadraticPresentation polynomial_presentation(int n);

/// Basis of J_n = ⋂_{i=0}^{n−2} V^{⊗i} ⊗ R ⊗ V^{⊗n−2−i} inside the span of
/// length-n paths, in reduced row-echelon form over canonical path order.
/// Every basis element has a single source and target.
std::vector<Element> compute_jn(const QuadraticPresentation& p, int n);

/// Minimal model built from J_1..J_nmax, d(a) = Σ_i (−1)^{i−1} δ_{i,n−i}(a).
/// The result is marked truncated at nmax.
DgModel minimal_model_general(const QuadraticPresentation& p, int nmax);

/// One vertex, a generator x_S per nonempty S ⊆ [n] with hdeg 1−|S| and adeg
/// |S|, d x_S = Σ_{S=A⊔B} (−1)^{|A|−1} ε_{A,B} x_A x_B.
DgModel polynomial_model(int n);
std::string polynomial_label(Subset s);

inline constexpr const char* kHypothesisWarning = "Gorenstein/isolated-singularity hypotheses fail";

/// Z/m acting diagonally on k[x1..xn] with weights a_i.
struct McKayData {
  int m = 2;
  std::vector<int> weights;

  /// Throws InvalidInput when m < 2, the weight list is empty, or a weight
  /// lies outside [0, m−1]. The gcd and sum conditions are only warnings.
  static McKayData make(int m, std::vector<int> weights);

  int n() const { return static_cast<int>(weights.size()); }
  /// d(S) = Σ_{i∈S} a_i, not reduced.
  int weight(Subset s) const;
  int target(int j, Subset s) const { return (j + weight(s)) % m; }
  std::vector<std::string> warnings() const;
  bool satisfies_hypotheses() const { return warnings().empty(); }
};

std::string mckay_label(int j, Subset s, int target);

/// Vertices 0..m−1, arrows x_{j,S,j+d(S)} for every j and nonempty S,
/// d x_{j,S} = Σ_{S=A⊔B} (−1)^{|A|−1} ε_{A,B} x_{j,A,·} x_{j+d(A),B,·}.
DgModel mckay_model(const McKayData& data);

/// The commutation presentation of the skew group algebra on the McKay
/// quiver: x_{j,k,·}x_{·,l,·} = x_{j,l,·}x_{·,k,·} for k < l. Built directly
/// from the weights, independently of mckay_model.
QuadraticPresentation mckay_presentation(const McKayData& data);

/// Removes v, every arrow touching v and every differential term whose path
/// passes through v. Throws InternalError if the result fails d² = 0.
DgModel delete_vertex(const DgModel& model, VertexId v);

}  // namespace dgq
