#include "dgq/path.hpp"

#include "dgq/errors.hpp"

#include <functional>

namespace dgq {

Path Path::idempotent(VertexId v) { return Path(v, v); }

Path Path::arrow(const GradedQuiver& q, ArrowIndex a) {
  const Arrow& arr = q.arrow(a);
  Path p(arr.source, arr.target);
  p.arrows_.push_back(a);
  p.hdeg_ = arr.hdeg;
  p.adeg_ = arr.adeg;
  return p;
}

Path Path::from_arrows(const GradedQuiver& q, VertexId start, std::span<const ArrowIndex> arrows) {
  Path p(start, start);
  p.arrows_.reserve(arrows.size());
  for (ArrowIndex a : arrows) {
    if (a >= q.arrow_count()) throw InvalidInput("arrow index out of range");
    const Arrow& arr = q.arrow(a);
    if (arr.source != p.target_) {
      throw InvalidInput("arrow '" + arr.id + "' is not composable at vertex " + std::to_string(p.target_));
    }
    p.arrows_.push_back(a);
    p.target_ = arr.target;
    p.hdeg_ += arr.hdeg;
    p.adeg_ += arr.adeg;
  }
  return p;
}

std::optional<Path> Path::concat(const Path& other) const {
  if (target_ != other.source_) return std::nullopt;
  Path p(source_, other.target_);
  p.arrows_.reserve(arrows_.size() + other.arrows_.size());
  p.arrows_ = arrows_;
  p.arrows_.insert(p.arrows_.end(), other.arrows_.begin(), other.arrows_.end());
  p.hdeg_ = hdeg_ + other.hdeg_;
  p.adeg_ = adeg_ + other.adeg_;
  return p;
}

Path Path::slice(const GradedQuiver& q, std::size_t begin, std::size_t end) const {
  if (begin > end || end > arrows_.size()) throw InvalidInput("path slice out of range");
  if (begin == end) {
    const VertexId v = begin == 0 ? source_ : q.arrow(arrows_[begin - 1]).target;
    return idempotent(v);
  }
  const VertexId start = q.arrow(arrows_[begin]).source;
  return from_arrows(q, start, std::span(arrows_).subspan(begin, end - begin));
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.arrows_.size() <=> b.arrows_.size(); c != 0) return c;
  if (auto c = a.arrows_ <=> b.arrows_; c != 0) return c;
  if (auto c = a.source_ <=> b.source_; c != 0) return c;
  return a.target_ <=> b.target_;
}

std::size_t PathHash::operator()(const Path& p) const noexcept {
  std::size_t h = std::hash<int>{}(p.source()) * 0x9e3779b97f4a7c15ULL;
  for (ArrowIndex a : p.arrows()) {
    h ^= std::hash<ArrowIndex>{}(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace dgq
