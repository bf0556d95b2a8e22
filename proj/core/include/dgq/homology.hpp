#pragma once

#include "dgq/koszul.hpp"
#include "dgq/linalg.hpp"
#include "dgq/presented_algebra.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace dgq {

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// kDefaultPathCap, or the value of DGQ_PATH_CAP when set. Throws
/// InvalidInput if the variable is not a positive integer.
std::size_t default_path_cap();

struct HomologyOptions {
  /// Maximum number of paths in one bidegree before ResourceLimit is thrown.
  std::size_t path_cap = default_path_cap();
  /// Worker threads used for independent eliminations.
  unsigned threads = 1;
};

/// The paths of one bidegree (h, a) and the matrix of d into (h+1, a).
struct BigradedSlice {
  int hdeg = 0;
  int adeg = 0;
  std::vector<Path> basis;
  /// columns[j] = d(basis[j]) in the basis of slice (h+1, a), as (row, coeff).
  std::vector<linalg::SparseRow<Rational>> columns;
};

/// Slices for hmin−1 ≤ h ≤ 0 and 0 ≤ a ≤ nadams, keyed by (h, a). The model
/// must be Adams-graded.
std::map<std::pair<int, int>, BigradedSlice> build_slices(const DgModel& model, int hmin, int nadams,
                                                          const HomologyOptions& opts = {});

/// Bigraded dimensions keyed by (h, a, source, target).
struct CohomologyTable {
  int hmin = 0;
  int nadams = 0;
  std::map<std::tuple<int, int, VertexId, VertexId>, std::size_t> dims;
  std::map<std::tuple<int, int, VertexId, VertexId>, std::size_t> chains;

  std::size_t dim(int h, int a) const;
  std::size_t dim(int h, int a, VertexId s, VertexId t) const;
  /// Σ_a dim H^h_a for a ≤ nadams.
  std::size_t total(int h) const;
  std::size_t chain_count(int h, int a) const;
};

/// dim H^h_a = dim ker − rank(incoming) per (h, a, source, target), for
/// hmin ≤ h ≤ 0 and a ≤ nadams, by exact elimination. d preserves Adams
/// degree, so each entry is exact for the completed algebra as well.
CohomologyTable cohomology_dims(const DgModel& model, int hmin, int nadams, const HomologyOptions& opts = {});

/// Generators: the hdeg-0 arrows. Relators: d(x) for every hdeg −1 arrow x.
/// Since the algebra lives in degrees ≤ 0 this presents H⁰ exactly.
PresentedAlgebra h0_presentation(const DgModel& model);

/// Quotient dimensions keyed by (source, target, a) for a ≤ nadams. Only
/// nonzero dimensions are stored.
using DimensionTable = std::map<std::tuple<VertexId, VertexId, int>, std::size_t>;
DimensionTable truncated_dims(const PresentedAlgebra& p, int nadams, const HomologyOptions& opts = {});
std::size_t total_dim(const DimensionTable& t);

/// Explicit correspondence from the generators (and vertices) of
/// h0_presentation(M) to those of P. Vertices default to the identity.
struct GeneratorMap {
  std::map<std::string, std::string> arrows;
  std::map<VertexId, VertexId> vertices;

  /// Maps every arrow id to itself.
  static GeneratorMap identity(const GradedQuiver& q);
};

/// Certifies H⁰(M) ≅ P up to Adams degree nadams as: the map is well defined
/// on generators, H⁰(M) from elimination agrees with h0_presentation(M),
/// graded dimensions agree per vertex pair, and the mapped relators of M lie
/// in the ideal of P. Throws InvalidInput for an unmapped generator.
CheckReport compare_h0(const DgModel& model, const PresentedAlgebra& p, const GeneratorMap& map, int nadams,
                       const HomologyOptions& opts = {});

}  // namespace dgq
