#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dgq {

using VertexId = int;
using ArrowIndex = std::uint32_t;

/// An arrow of a graded quiver. `hdeg` is the homological (DG) degree and is
/// never positive; `adeg` is the Adams weight and is at least one, so every
/// bidegree contains finitely many paths.
struct Arrow {
  std::string id;
  VertexId source = 0;
  VertexId target = 0;
  int hdeg = 0;
  int adeg = 1;
  std::string label;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Vertices plus degree-tagged arrows. Arrows are addressed by their position
/// (ArrowIndex) internally and by their string id at the I/O boundary.
class GradedQuiver {
 public:
  GradedQuiver() = default;
  explicit GradedQuiver(std::vector<VertexId> vertices);

  /// Validates and appends; returns the new arrow's index.
  ArrowIndex add_arrow(Arrow arrow);
  ArrowIndex add_arrow(std::string id, VertexId source, VertexId target, int hdeg, int adeg);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(ArrowIndex i) const { return arrows_.at(i); }
  std::size_t arrow_count() const { return arrows_.size(); }

  bool has_vertex(VertexId v) const;
  std::optional<ArrowIndex> find(std::string_view id) const;
  /// Like find() but throws InvalidInput for unknown ids.
  ArrowIndex index_of(std::string_view id) const;

  int max_adeg() const;
  int min_hdeg() const;

  friend bool operator==(const GradedQuiver& a, const GradedQuiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, ArrowIndex> by_id_;
};

}  // namespace dgq
