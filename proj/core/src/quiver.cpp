#include "dgq/quiver.hpp"

#include "dgq/errors.hpp"

#include <algorithm>
#include <limits>

namespace dgq {

GradedQuiver::GradedQuiver(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  auto sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("duplicate vertex id");
  }
}

ArrowIndex GradedQuiver::add_arrow(Arrow arrow) {
  if (arrow.id.empty()) throw InvalidInput("arrow id must be non-empty");
  if (by_id_.contains(arrow.id)) throw InvalidInput("duplicate arrow id '" + arrow.id + "'");
  if (!has_vertex(arrow.source) || !has_vertex(arrow.target)) {
    throw InvalidInput("arrow '" + arrow.id + "' references an unknown vertex");
  }
  if (arrow.hdeg > 0) throw InvalidInput("arrow '" + arrow.id + "' has positive homological degree");
  if (arrow.adeg < 1) throw InvalidInput("arrow '" + arrow.id + "' has Adams degree < 1");
  if (arrow.label.empty()) arrow.label = arrow.id;
  const auto index = static_cast<ArrowIndex>(arrows_.size());
  by_id_.emplace(arrow.id, index);
  arrows_.push_back(std::move(arrow));
  return index;
}

ArrowIndex GradedQuiver::add_arrow(std::string id, VertexId source, VertexId target, int hdeg, int adeg) {
  return add_arrow(Arrow{std::move(id), source, target, hdeg, adeg, {}});
}

bool GradedQuiver::has_vertex(VertexId v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::optional<ArrowIndex> GradedQuiver::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

ArrowIndex GradedQuiver::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw InvalidInput("unknown arrow id '" + std::string(id) + "'");
}

int GradedQuiver::max_adeg() const {
  int m = 0;
  for (const auto& a : arrows_) m = std::max(m, a.adeg);
  return m;
}

int GradedQuiver::min_hdeg() const {
  int m = 0;
  for (const auto& a : arrows_) m = std::min(m, a.hdeg);
  return m;
}

}  // namespace dgq
