#include "dgq/homology.hpp"

#include "dgq/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <unordered_map>

namespace dgq {

void PresentedAlgebra::validate() const {
  for (const auto& a : quiver.arrows()) {
    if (a.hdeg != 0) throw InvalidInput("presented algebra arrow '" + a.id + "' must have homological degree 0");
  }
  for (const auto& r : relators) {
    if (r.is_zero()) throw InvalidInput("zero relator");
    const Path& first = r.begin()->first;
    for (const auto& [p, c] : r) {
      if (p.source() != first.source() || p.target() != first.target()) {
        throw InvalidInput("relator is not component-pure");
      }
      if (!quiver.has_vertex(p.source()) || !quiver.has_vertex(p.target())) {
        throw InvalidInput("relator at unknown vertex");
      }
      for (ArrowIndex a : p.arrows()) {
        if (a >= quiver.arrow_count()) throw InvalidInput("relator references an unknown arrow");
      }
    }
    if (!r.adeg()) throw InvalidInput("relator is not Adams-homogeneous");
  }
}

std::size_t default_path_cap() {
  const char* env = std::getenv("DGQ_PATH_CAP");
  if (env == nullptr || *env == '\0') return kDefaultPathCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw InvalidInput("DGQ_PATH_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

namespace {

using BlockKey = std::tuple<int, int, VertexId, VertexId>;  // (h, a, source, target)

// Every path with hdeg ≥ hfloor and adeg ≤ nadams, bucketed by block, each
// bucket in canonical order.
std::map<BlockKey, std::vector<Path>> enumerate_paths(const GradedQuiver& q, int hfloor, int nadams,
                                                      std::size_t cap) {
  std::map<BlockKey, std::vector<Path>> blocks;
  std::map<std::pair<int, int>, std::size_t> per_slice;
  std::vector<std::vector<ArrowIndex>> out_arrows;
  std::map<VertexId, std::size_t> vpos;
  for (std::size_t i = 0; i < q.vertices().size(); ++i) vpos[q.vertices()[i]] = i;
  out_arrows.resize(q.vertices().size());
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) out_arrows[vpos.at(q.arrow(a).source)].push_back(a);

  std::vector<Path> stack;
  for (VertexId v : q.vertices()) stack.push_back(Path::idempotent(v));
  while (!stack.empty()) {
    Path p = std::move(stack.back());
    stack.pop_back();
    for (ArrowIndex a : out_arrows[vpos.at(p.target())]) {
      const Arrow& arr = q.arrow(a);
      if (p.adeg() + arr.adeg > nadams || p.hdeg() + arr.hdeg < hfloor) continue;
      stack.push_back(*p.concat(Path::arrow(q, a)));
    }
    if (++per_slice[{p.hdeg(), p.adeg()}] > cap) {
      throw ResourceLimit("more than " + std::to_string(cap) + " paths in bidegree (" + std::to_string(p.hdeg()) +
                          ", " + std::to_string(p.adeg()) + ")");
    }
    blocks[{p.hdeg(), p.adeg(), p.source(), p.target()}].push_back(std::move(p));
  }
  for (auto& [k, paths] : blocks) std::sort(paths.begin(), paths.end());
  return blocks;
}

using PathIndex = std::unordered_map<Path, linalg::Column, PathHash>;

PathIndex index_paths(const std::vector<Path>& paths) {
  PathIndex idx;
  idx.reserve(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) idx.emplace(paths[i], static_cast<linalg::Column>(i));
  return idx;
}

linalg::SparseRow<Rational> image_row(const Differential& d, const Path& p, const PathIndex& target) {
  linalg::SparseRow<Rational> row;
  for (const auto& [q, c] : apply(d, p)) {
    auto it = target.find(q);
    if (it == target.end()) throw InternalError("differential left its bidegree block");
    row.emplace_back(it->second, c);
  }
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

void require_adams_graded(const DgModel& model) {
  if (!model.adams_graded) {
    throw InvalidInput("cohomology needs an Adams-homogeneous differential; this model is graded by path length only");
  }
}

}  // namespace

std::map<std::pair<int, int>, BigradedSlice> build_slices(const DgModel& model, int hmin, int nadams,
                                                          const HomologyOptions& opts) {
  require_adams_graded(model);
  if (hmin > 0 || nadams < 0) throw InvalidInput("build_slices needs hmin <= 0 and nadams >= 0");
  auto blocks = enumerate_paths(model.quiver(), hmin - 1, nadams, opts.path_cap);
  std::map<std::pair<int, int>, BigradedSlice> slices;
  for (auto& [key, paths] : blocks) {
    auto& s = slices[{std::get<0>(key), std::get<1>(key)}];
    s.hdeg = std::get<0>(key);
    s.adeg = std::get<1>(key);
    s.basis.insert(s.basis.end(), paths.begin(), paths.end());
  }
  for (auto& [key, s] : slices) std::sort(s.basis.begin(), s.basis.end());
  for (auto& [key, s] : slices) {
    auto next = slices.find({key.first + 1, key.second});
    const PathIndex idx = next == slices.end() ? PathIndex{} : index_paths(next->second.basis);
    s.columns.reserve(s.basis.size());
    for (const Path& p : s.basis) s.columns.push_back(image_row(model.differential, p, idx));
  }
  return slices;
}

std::size_t CohomologyTable::dim(int h, int a) const {
  std::size_t n = 0;
  for (const auto& [k, v] : dims) {
    if (std::get<0>(k) == h && std::get<1>(k) == a) n += v;
  }
  return n;
}

std::size_t CohomologyTable::dim(int h, int a, VertexId s, VertexId t) const {
  auto it = dims.find({h, a, s, t});
  return it == dims.end() ? 0 : it->second;
}

std::size_t CohomologyTable::total(int h) const {
  std::size_t n = 0;
  for (const auto& [k, v] : dims) {
    if (std::get<0>(k) == h) n += v;
  }
  return n;
}

std::size_t CohomologyTable::chain_count(int h, int a) const {
  std::size_t n = 0;
  for (const auto& [k, v] : chains) {
    if (std::get<0>(k) == h && std::get<1>(k) == a) n += v;
  }
  return n;
}

CohomologyTable cohomology_dims(const DgModel& model, int hmin, int nadams, const HomologyOptions& opts) {
  require_adams_graded(model);
  if (hmin > 0) throw InvalidInput("cohomology_dims needs hmin <= 0");
  if (nadams < 1) throw InvalidInput("cohomology_dims needs nadams >= 1");
  const auto blocks = enumerate_paths(model.quiver(), hmin - 1, nadams, opts.path_cap);

  // rank of d out of every block with h ≤ −1 (d out of h = 0 lands in h = 1 = 0).
  std::vector<const std::pair<const BlockKey, std::vector<Path>>*> jobs;
  for (const auto& entry : blocks) {
    if (std::get<0>(entry.first) <= -1) jobs.push_back(&entry);
  }
  std::vector<std::size_t> ranks(jobs.size(), 0);
  detail::parallel_for(jobs.size(), opts.threads, [&](std::size_t i) {
    const auto& [key, paths] = *jobs[i];
    const auto& [h, a, s, t] = key;
    auto next = blocks.find({h + 1, a, s, t});
    if (next == blocks.end()) return;
    const PathIndex idx = index_paths(next->second);
    linalg::Echelon e;
    for (const Path& p : paths) {
      e.insert(image_row(model.differential, p, idx));
      if (e.rank() == next->second.size()) break;
    }
    ranks[i] = e.rank();
  });
  std::map<BlockKey, std::size_t> rank_out;
  for (std::size_t i = 0; i < jobs.size(); ++i) rank_out[jobs[i]->first] = ranks[i];

  CohomologyTable table;
  table.hmin = hmin;
  table.nadams = nadams;
  for (const auto& [key, paths] : blocks) {
    const auto& [h, a, s, t] = key;
    if (h < hmin) continue;
    const std::size_t out = rank_out.contains(key) ? rank_out.at(key) : 0;
    const BlockKey prev{h - 1, a, s, t};
    const std::size_t in = rank_out.contains(prev) ? rank_out.at(prev) : 0;
    table.chains[key] = paths.size();
    table.dims[key] = paths.size() - out - in;
  }
  return table;
}

PresentedAlgebra h0_presentation(const DgModel& model) {
  const GradedQuiver& q = model.quiver();
  PresentedAlgebra p{GradedQuiver(q.vertices()), {}};
  std::vector<std::optional<ArrowIndex>> map(q.arrow_count());
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    if (q.arrow(a).hdeg == 0) map[a] = p.quiver.add_arrow(q.arrow(a));
  }
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    if (q.arrow(a).hdeg != -1) continue;
    Element r = transport(model.differential.on_arrow(a), p.quiver, map);
    if (r.size() != model.differential.on_arrow(a).size()) {
      throw InternalError("d of a degree -1 arrow involves arrows of nonzero degree");
    }
    if (!r.is_zero()) p.relators.push_back(std::move(r));
  }
  return p;
}

namespace {

using QuotientKey = std::tuple<VertexId, VertexId, int>;  // (source, target, a)

// Degreewise span of the two-sided ideal generated by the relators:
// I_a = R_a + Σ_x x·I_{a−|x|} + Σ_x I_{a−|x|}·x.
class TruncatedIdeal {
 public:
  TruncatedIdeal(const PresentedAlgebra& p, int nadams, std::size_t cap) : p_(p), nadams_(nadams) {
    p.validate();
    const GradedQuiver& q = p.quiver;
    for (auto& [key, paths] : enumerate_paths(q, std::numeric_limits<int>::min() / 2, nadams, cap)) {
      const auto& [h, a, s, t] = key;
      auto& dst = paths_[{s, t, a}];
      dst.insert(dst.end(), paths.begin(), paths.end());
    }
    for (auto& [key, paths] : paths_) {
      std::sort(paths.begin(), paths.end());
      index_[key] = index_paths(paths);
    }
    for (int a = 0; a <= nadams; ++a) {
      for (const auto& [key, paths] : paths_) {
        if (std::get<2>(key) != a) continue;
        build_block(key);
      }
    }
  }

  std::size_t path_count(const QuotientKey& k) const {
    auto it = paths_.find(k);
    return it == paths_.end() ? 0 : it->second.size();
  }
  std::size_t ideal_rank(const QuotientKey& k) const {
    auto it = ideal_.find(k);
    return it == ideal_.end() ? 0 : it->second.rank();
  }
  const std::map<QuotientKey, std::vector<Path>>& blocks() const { return paths_; }

  bool contains(const Element& e) const {
    std::map<QuotientKey, linalg::SparseRow<Rational>> rows;
    for (const auto& [p, c] : e) {
      const QuotientKey k{p.source(), p.target(), p.adeg()};
      if (p.adeg() > nadams_) throw InvalidInput("membership test above the truncation degree");
      rows[k].emplace_back(index_.at(k).at(p), c);
    }
    for (auto& [k, row] : rows) {
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      auto it = ideal_.find(k);
      if (it == ideal_.end() || !it->second.contains(row)) return false;
    }
    return true;
  }

 private:
  linalg::SparseRow<Rational> to_row(const QuotientKey& k, const Element& e) const {
    linalg::SparseRow<Rational> row;
    const auto& idx = index_.at(k);
    for (const auto& [p, c] : e) row.emplace_back(idx.at(p), c);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return row;
  }

  void build_block(const QuotientKey& key) {
    const auto& [s, t, a] = key;
    const GradedQuiver& q = p_.quiver;
    linalg::Echelon e;
    const std::size_t full = paths_.at(key).size();
    auto add = [&](const Element& v) {
      if (!v.is_zero() && e.rank() < full) e.insert(to_row(key, v));
    };
    for (const auto& r : p_.relators) {
      const Path& first = r.begin()->first;
      if (first.source() == s && first.target() == t && first.adeg() == a) add(r);
    }
    for (ArrowIndex x = 0; x < q.arrow_count(); ++x) {
      const Arrow& arr = q.arrow(x);
      if (arr.adeg > a) continue;
      const Element ex(Path::arrow(q, x));
      if (arr.source == s) {
        for (const Element& b : basis({arr.target, t, a - arr.adeg})) add(ex * b);
      }
      if (arr.target == t) {
        for (const Element& b : basis({s, arr.source, a - arr.adeg})) add(b * ex);
      }
    }
    std::vector<Element> rows;
    for (const auto& row : e.basis()) {
      Element el;
      for (const auto& [col, c] : row) el.add_term(paths_.at(key)[col], c);
      rows.push_back(std::move(el));
    }
    basis_[key] = std::move(rows);
    ideal_.emplace(key, std::move(e));
  }

  const std::vector<Element>& basis(const QuotientKey& k) const {
    static const std::vector<Element> empty;
    auto it = basis_.find(k);
    return it == basis_.end() ? empty : it->second;
  }

  const PresentedAlgebra& p_;
  int nadams_;
  std::map<QuotientKey, std::vector<Path>> paths_;
  std::map<QuotientKey, PathIndex> index_;
  std::map<QuotientKey, linalg::Echelon> ideal_;
  std::map<QuotientKey, std::vector<Element>> basis_;
};

}  // namespace

DimensionTable truncated_dims(const PresentedAlgebra& p, int nadams, const HomologyOptions& opts) {
  if (nadams < 0) throw InvalidInput("truncated_dims needs nadams >= 0");
  const TruncatedIdeal ideal(p, nadams, opts.path_cap);
  DimensionTable out;
  for (const auto& [key, paths] : ideal.blocks()) {
    const std::size_t dim = paths.size() - ideal.ideal_rank(key);
    if (dim != 0) out[key] = dim;
  }
  return out;
}

std::size_t total_dim(const DimensionTable& t) {
  std::size_t n = 0;
  for (const auto& [k, v] : t) n += v;
  return n;
}

GeneratorMap GeneratorMap::identity(const GradedQuiver& q) {
  GeneratorMap m;
  for (const auto& a : q.arrows()) m.arrows[a.id] = a.id;
  return m;
}

CheckReport compare_h0(const DgModel& model, const PresentedAlgebra& target, const GeneratorMap& map, int nadams,
                       const HomologyOptions& opts) {
  const std::string note =
      "isomorphism certified up to Adams degree " + std::to_string(nadams) +
      " as graded dimension equality under an explicit generator map plus relator containment";
  if (nadams < 1) throw InvalidInput("compare_h0 needs nadams >= 1");
  const PresentedAlgebra source = h0_presentation(model);
  const GradedQuiver& sq = source.quiver;
  const GradedQuiver& tq = target.quiver;

  auto vmap = [&](VertexId v) {
    auto it = map.vertices.find(v);
    return it == map.vertices.end() ? v : it->second;
  };
  for (VertexId v : sq.vertices()) {
    if (!tq.has_vertex(vmap(v))) throw InvalidInput("vertex " + std::to_string(v) + " maps outside the presentation");
  }
  std::vector<ArrowIndex> amap(sq.arrow_count());
  for (ArrowIndex a = 0; a < sq.arrow_count(); ++a) {
    const Arrow& arr = sq.arrow(a);
    auto it = map.arrows.find(arr.id);
    if (it == map.arrows.end()) throw InvalidInput("unmapped generator '" + arr.id + "'");
    const auto ta = tq.find(it->second);
    if (!ta) throw InvalidInput("generator '" + arr.id + "' maps to unknown arrow '" + it->second + "'");
    const Arrow& tarr = tq.arrow(*ta);
    if (vmap(arr.source) != tarr.source || vmap(arr.target) != tarr.target || arr.adeg != tarr.adeg) {
      return CheckReport::fail("compare_h0", "generator " + arr.id + " -> " + tarr.id + " does not respect endpoints/degree", note);
    }
    amap[a] = *ta;
  }

  // H⁰ by elimination must agree with the presentation read off the model.
  const DimensionTable src_dims = truncated_dims(source, nadams, opts);
  const CohomologyTable h = cohomology_dims(model, 0, nadams, opts);
  for (int a = 0; a <= nadams; ++a) {
    for (VertexId s : sq.vertices()) {
      for (VertexId t : sq.vertices()) {
        auto it = src_dims.find({s, t, a});
        const std::size_t pres = it == src_dims.end() ? 0 : it->second;
        if (pres != h.dim(0, a, s, t)) {
          return CheckReport::fail("compare_h0",
                                   "H0 of the model disagrees with its degree-0 presentation at (" + std::to_string(s) +
                                       "," + std::to_string(t) + ") Adams degree " + std::to_string(a),
                                   note);
        }
      }
    }
  }

  const TruncatedIdeal tideal(target, nadams, opts.path_cap);
  auto target_dim = [&](VertexId s, VertexId t, int a) {
    const QuotientKey k{s, t, a};
    return tideal.path_count(k) - tideal.ideal_rank(k);
  };
  std::map<VertexId, VertexId> image;
  for (VertexId v : sq.vertices()) image[vmap(v)] = v;
  for (int a = 0; a <= nadams; ++a) {
    for (VertexId s : tq.vertices()) {
      for (VertexId t : tq.vertices()) {
        std::size_t expected = 0;
        if (image.contains(s) && image.contains(t)) {
          auto it = src_dims.find({image.at(s), image.at(t), a});
          expected = it == src_dims.end() ? 0 : it->second;
        }
        const std::size_t got = target_dim(s, t, a);
        if (expected != got) {
          return CheckReport::fail("compare_h0",
                                   "dimension mismatch at vertices (" + std::to_string(s) + "," + std::to_string(t) +
                                       ") Adams degree " + std::to_string(a) + ": H0 has " + std::to_string(expected) +
                                       ", presentation has " + std::to_string(got),
                                   note);
        }
      }
    }
  }

  for (const Element& r : source.relators) {
    if (*r.adeg() > nadams) continue;
    Element mapped;
    for (const auto& [p, c] : r) {
      std::vector<ArrowIndex> arrows;
      for (ArrowIndex a : p.arrows()) arrows.push_back(amap[a]);
      mapped.add_term(Path::from_arrows(tq, vmap(p.source()), arrows), c);
    }
    if (!tideal.contains(mapped)) {
      return CheckReport::fail("compare_h0", "a relator of H0 does not vanish in the presentation", note);
    }
  }
  return CheckReport::pass("compare_h0", note);
}

}  // namespace dgq
