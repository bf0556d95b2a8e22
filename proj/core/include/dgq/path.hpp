#pragma once

#include "dgq/quiver.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dgq {

/// A composable sequence of arrows, read left to right: the target of each
/// arrow is the source of the next. The empty sequence at vertex v is the
/// idempotent e_v. Degrees are cached and additive under concatenation.
class Path {
 public:
  static Path idempotent(VertexId v);
  static Path arrow(const GradedQuiver& q, ArrowIndex a);
  /// Throws InvalidInput if the arrows are not composable starting at `start`.
  static Path from_arrows(const GradedQuiver& q, VertexId start, std::span<const ArrowIndex> arrows);

  VertexId source() const { return source_; }
  VertexId target() const { return target_; }
  int hdeg() const { return hdeg_; }
  int adeg() const { return adeg_; }
  std::size_t length() const { return arrows_.size(); }
  bool is_idempotent() const { return arrows_.empty(); }
  bool is_cycle() const { return source_ == target_; }
  const std::vector<ArrowIndex>& arrows() const { return arrows_; }

  /// this·other, or nullopt when target() != other.source().
  std::optional<Path> concat(const Path& other) const;
  /// Sub-path of arrows [begin, end). Endpoints recomputed from the quiver.
  Path slice(const GradedQuiver& q, std::size_t begin, std::size_t end) const;

  /// Canonical order: by length, then arrow sequence, then endpoints.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend bool operator==(const Path& a, const Path& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.arrows_ == b.arrows_;
  }

 private:
  Path(VertexId s, VertexId t) : source_(s), target_(t) {}

  VertexId source_ = 0;
  VertexId target_ = 0;
  std::vector<ArrowIndex> arrows_;
  int hdeg_ = 0;
  int adeg_ = 0;
};

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept;
};

}  // namespace dgq
