#include "dgq/koszul.hpp"

#include "dgq/errors.hpp"
#include "dgq/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace dgq {

std::string subset_string(Subset s) {
  if (s == 0) return "0";
  std::vector<int> elems;
  for (int i = 0; i < 32; ++i) {
    if (s & (Subset{1} << i)) elems.push_back(i + 1);
  }
  const bool wide = elems.back() > 9;
  std::string out;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (wide && k > 0) out += '.';
    out += std::to_string(elems[k]);
  }
  return out;
}

std::vector<Subset> ordered_subsets(int n) {
  if (n < 0 || n > 30) throw InvalidInput("subset universe size out of range");
  std::vector<Subset> out;
  for (Subset s = 1; s <= full_subset(n); ++s) out.push_back(s);
  // Lexicographic on the ascending element list: compare lowest differing element.
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
    const Subset diff = a ^ b;
    const Subset low = diff & (~diff + 1);
    return (a & low) != 0;
  });
  return out;
}

int shuffle_sign(Subset a, Subset b) {
  if (a & b) throw InvalidInput("shuffle_sign: subsets are not disjoint");
  int inversions = 0;
  for (int i = 0; i < 32; ++i) {
    if (b & (Subset{1} << i)) inversions += subset_size(i == 31 ? 0 : a >> (i + 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::general: return "general";
    case Provenance::polynomial: return "polynomial";
    case Provenance::mckay: return "mckay";
    case Provenance::ginzburg: return "ginzburg";
    case Provenance::custom: return "custom";
  }
  return "custom";
}

Provenance parse_provenance(std::string_view s) {
  if (s == "general") return Provenance::general;
  if (s == "polynomial") return Provenance::polynomial;
  if (s == "mckay") return Provenance::mckay;
  if (s == "ginzburg") return Provenance::ginzburg;
  if (s == "custom") return Provenance::custom;
  throw InvalidInput("unknown provenance '" + std::string(s) + "'");
}

void QuadraticPresentation::validate() const {
  for (const auto& a : quiver.arrows()) {
    if (a.hdeg != 0 || a.adeg != 1) throw InvalidInput("quadratic presentation arrow '" + a.id + "' must have degrees (0, 1)");
  }
  for (const auto& r : relators) {
    if (r.is_zero()) throw InvalidInput("zero relator in quadratic presentation");
    const Path& first = r.begin()->first;
    for (const auto& [p, c] : r) {
      if (p.length() != 2) throw InvalidInput("quadratic relator has a term of length " + std::to_string(p.length()));
      if (p.source() != first.source() || p.target() != first.target()) {
        throw InvalidInput("quadratic relator is not component-pure");
      }
      for (ArrowIndex a : p.arrows()) {
        if (a >= quiver.arrow_count()) throw InvalidInput("relator references an unknown arrow");
      }
    }
  }
}

QuadraticPresentation polynomial_presentation(int n) {
  if (n < 1) throw InvalidInput("polynomial presentation needs n >= 1");
  QuadraticPresentation p{GradedQuiver({0}), {}};
  for (int i = 1; i <= n; ++i) p.quiver.add_arrow("x" + std::to_string(i), 0, 0, 0, 1);
  for (ArrowIndex i = 0; i < static_cast<ArrowIndex>(n); ++i) {
    for (ArrowIndex j = i + 1; j < static_cast<ArrowIndex>(n); ++j) {
      const std::vector<ArrowIndex> ij{i, j}, ji{j, i};
      Element r(Path::from_arrows(p.quiver, 0, ij));
      r.add_term(Path::from_arrows(p.quiver, 0, ji), -1);
      p.relators.push_back(std::move(r));
    }
  }
  return p;
}

namespace {

using Component = std::pair<VertexId, VertexId>;

// All paths of exactly `len` arrows, grouped by (source, target), in canonical order.
std::map<Component, std::vector<Path>> paths_of_length(const GradedQuiver& q, int len) {
  std::vector<Path> frontier;
  for (VertexId v : q.vertices()) frontier.push_back(Path::idempotent(v));
  for (int step = 0; step < len; ++step) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
        if (auto pa = p.concat(Path::arrow(q, a))) next.push_back(std::move(*pa));
      }
    }
    frontier = std::move(next);
  }
  std::map<Component, std::vector<Path>> out;
  for (auto& p : frontier) out[{p.source(), p.target()}].push_back(std::move(p));
  for (auto& [c, ps] : out) std::sort(ps.begin(), ps.end());
  return out;
}

}  // namespace

std::vector<Element> compute_jn(const QuadraticPresentation& pres, int n) {
  if (n < 1) throw InvalidInput("compute_jn needs n >= 1");
  pres.validate();
  const GradedQuiver& q = pres.quiver;

  // Annihilator of R, component by component: functionals on length-2 paths.
  std::map<Component, std::vector<Path>> length2 = paths_of_length(q, 2);
  std::map<Component, std::vector<linalg::SparseRow<Rational>>> annihilator;
  std::map<Component, std::map<Path, linalg::Column>> length2_index;
  for (const auto& [comp, paths] : length2) {
    auto& index = length2_index[comp];
    for (std::size_t i = 0; i < paths.size(); ++i) index.emplace(paths[i], static_cast<linalg::Column>(i));
    std::vector<linalg::SparseRow<Rational>> rel_rows;
    for (const auto& r : pres.relators) {
      const Path& first = r.begin()->first;
      if (Component{first.source(), first.target()} != comp) continue;
      linalg::SparseRow<Rational> row;
      for (const auto& [p, c] : r) row.emplace_back(index.at(p), c);
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rel_rows.push_back(std::move(row));
    }
    annihilator[comp] = linalg::nullspace(rel_rows, paths.size());
  }

  std::vector<Element> basis;
  for (const auto& [comp, paths] : paths_of_length(q, n)) {
    std::map<Path, linalg::Column> var;
    for (std::size_t i = 0; i < paths.size(); ++i) var.emplace(paths[i], static_cast<linalg::Column>(i));

    // Group words by (position, prefix, suffix); within a group the middle
    // pair's coefficient vector must lie in R.
    using Key = std::tuple<int, std::vector<ArrowIndex>, std::vector<ArrowIndex>>;
    std::map<Key, std::vector<std::pair<linalg::Column, Path>>> groups;
    for (std::size_t w = 0; w < paths.size(); ++w) {
      const auto& arrows = paths[w].arrows();
      for (int i = 0; i + 2 <= n; ++i) {
        Key key{i, std::vector<ArrowIndex>(arrows.begin(), arrows.begin() + i),
                std::vector<ArrowIndex>(arrows.begin() + i + 2, arrows.end())};
        groups[key].emplace_back(static_cast<linalg::Column>(w), paths[w].slice(q, i, i + 2));
      }
    }
    std::vector<linalg::SparseRow<Rational>> constraints;
    for (const auto& [key, members] : groups) {
      const Path& mid = members.front().second;
      const Component mc{mid.source(), mid.target()};
      const auto& index = length2_index.at(mc);
      for (const auto& phi : annihilator.at(mc)) {
        linalg::SparseRow<Rational> row;
        for (const auto& [col, m] : members) {
          const linalg::Column mcol = index.at(m);
          auto it = std::lower_bound(phi.begin(), phi.end(), mcol, [](const auto& e, linalg::Column c) { return e.first < c; });
          if (it != phi.end() && it->first == mcol) row.emplace_back(col, it->second);
        }
        if (row.empty()) continue;
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        constraints.push_back(std::move(row));
      }
    }
    for (const auto& v : linalg::nullspace(constraints, paths.size())) {
      Element e;
      for (const auto& [col, c] : v) e.add_term(paths[col], c);
      basis.push_back(std::move(e));
    }
  }
  // Canonical order: by pivot (leading) path.
  std::sort(basis.begin(), basis.end(),
            [](const Element& a, const Element& b) { return a.begin()->first < b.begin()->first; });
  return basis;
}

DgModel minimal_model_general(const QuadraticPresentation& pres, int nmax) {
  if (nmax < 2) throw InvalidInput("minimal_model_general needs nmax >= 2");
  pres.validate();
  const GradedQuiver& base = pres.quiver;

  std::vector<std::vector<Element>> jn(nmax + 1);
  for (int n = 1; n <= nmax; ++n) jn[n] = compute_jn(pres, n);

  GradedQuiver q(base.vertices());
  // generator[n][k] = arrow index of the k-th basis element of J_n.
  std::vector<std::vector<ArrowIndex>> generator(nmax + 1);
  std::vector<std::map<Path, std::size_t>> pivot_of(nmax + 1);
  for (int n = 1; n <= nmax; ++n) {
    for (std::size_t k = 0; k < jn[n].size(); ++k) {
      const Element& b = jn[n][k];
      const Path& lead = b.begin()->first;
      std::string id;
      if (n == 1) {
        id = base.arrow(lead.arrows().front()).id;
      } else {
        id = "J" + std::to_string(n) + "_" + std::to_string(k + 1);
      }
      generator[n].push_back(q.add_arrow(Arrow{id, lead.source(), lead.target(), 1 - n, n, id}));
      pivot_of[n].emplace(lead, k);
    }
  }

  std::vector<Element> images(q.arrow_count());
  for (int n = 2; n <= nmax; ++n) {
    for (std::size_t k = 0; k < jn[n].size(); ++k) {
      const Element& a = jn[n][k];
      Element d;
      for (int i = 1; i < n; ++i) {
        // In RREF the coefficient of b_k ⊗ b'_l in a is a's coefficient at
        // pivot(b_k)·pivot(b'_l).
        Element rebuilt;
        for (const auto& [w, c] : a) {
          auto left = pivot_of[i].find(w.slice(base, 0, i));
          if (left == pivot_of[i].end()) continue;
          auto right = pivot_of[n - i].find(w.slice(base, i, n));
          if (right == pivot_of[n - i].end()) continue;
          rebuilt += multiply(jn[i][left->second], jn[n - i][right->second]) * c;
          const std::vector<ArrowIndex> pair{generator[i][left->second], generator[n - i][right->second]};
          d.add_term(Path::from_arrows(q, w.source(), pair), (i - 1) % 2 == 0 ? c : Rational(-c));
        }
        if (rebuilt != a) {
          throw InternalError("J_" + std::to_string(n) + " basis element not contained in J_" + std::to_string(i) +
                              " (x) J_" + std::to_string(n - i));
        }
      }
      images[generator[n][k]] = std::move(d);
    }
  }
  return DgModel{Differential(std::move(q), std::move(images)), Provenance::general, nmax, true};
}

std::string polynomial_label(Subset s) { return "x" + subset_string(s); }

DgModel polynomial_model(int n) {
  if (n < 1) throw InvalidInput("polynomial_model needs n >= 1");
  if (n > 20) throw InvalidInput("polynomial_model: n too large");
  GradedQuiver q({0});
  std::map<Subset, ArrowIndex> index;
  const auto subsets = ordered_subsets(n);
  for (Subset s : subsets) {
    const int size = subset_size(s);
    index[s] = q.add_arrow(polynomial_label(s), 0, 0, 1 - size, size);
  }
  std::vector<Element> images(q.arrow_count());
  for (Subset s : subsets) {
    Element d;
    for (Subset a = (s - 1) & s; a != 0; a = (a - 1) & s) {
      const Subset b = s & ~a;
      const int sign = (subset_size(a) % 2 == 1 ? 1 : -1) * shuffle_sign(a, b);
      const std::vector<ArrowIndex> word{index[a], index[b]};
      d.add_term(Path::from_arrows(q, 0, word), sign);
    }
    images[index[s]] = std::move(d);
  }
  return DgModel{Differential(std::move(q), std::move(images)), Provenance::polynomial, std::nullopt, true};
}

McKayData McKayData::make(int m, std::vector<int> weights) {
  if (m < 2) throw InvalidInput("McKay data needs m >= 2");
  if (weights.empty()) throw InvalidInput("McKay data needs at least one weight");
  if (weights.size() > 16) throw InvalidInput("McKay data: too many weights");
  for (int a : weights) {
    if (a < 0 || a > m - 1) throw InvalidInput("weight " + std::to_string(a) + " outside [0, m-1]");
  }
  return McKayData{m, std::move(weights)};
}

int McKayData::weight(Subset s) const {
  int w = 0;
  for (int i = 0; i < n(); ++i) {
    if (s & (Subset{1} << i)) w += weights[i];
  }
  return w;
}

std::vector<std::string> McKayData::warnings() const {
  std::vector<std::string> out;
  for (int i = 0; i < n(); ++i) {
    if (std::gcd(weights[i], m) != 1) {
      out.push_back(std::string(kHypothesisWarning) + ": gcd(a_" + std::to_string(i + 1) + ", m) = " +
                    std::to_string(std::gcd(weights[i], m)));
    }
  }
  if (weight(full_subset(n())) % m != 0) {
    out.push_back(std::string(kHypothesisWarning) + ": sum of weights is not divisible by m");
  }
  return out;
}

std::string mckay_label(int j, Subset s, int target) {
  return "x_" + std::to_string(j) + "_" + subset_string(s) + "_" + std::to_string(target);
}

DgModel mckay_model(const McKayData& data) {
  McKayData::make(data.m, data.weights);
  std::vector<VertexId> vertices(data.m);
  std::iota(vertices.begin(), vertices.end(), 0);
  GradedQuiver q(vertices);
  const auto subsets = ordered_subsets(data.n());
  std::map<std::pair<int, Subset>, ArrowIndex> index;
  for (Subset s : subsets) {
    const int size = subset_size(s);
    for (int j = 0; j < data.m; ++j) {
      const int t = data.target(j, s);
      index[{j, s}] = q.add_arrow(mckay_label(j, s, t), j, t, 1 - size, size);
    }
  }
  std::vector<Element> images(q.arrow_count());
  for (Subset s : subsets) {
    for (int j = 0; j < data.m; ++j) {
      Element d;
      for (Subset a = (s - 1) & s; a != 0; a = (a - 1) & s) {
        const Subset b = s & ~a;
        const int sign = (subset_size(a) % 2 == 1 ? 1 : -1) * shuffle_sign(a, b);
        const std::vector<ArrowIndex> word{index.at({j, a}), index.at({data.target(j, a), b})};
        d.add_term(Path::from_arrows(q, j, word), sign);
      }
      images[index.at({j, s})] = std::move(d);
    }
  }
  return DgModel{Differential(std::move(q), std::move(images)), Provenance::mckay, std::nullopt, true};
}

QuadraticPresentation mckay_presentation(const McKayData& data) {
  McKayData::make(data.m, data.weights);
  std::vector<VertexId> vertices(data.m);
  std::iota(vertices.begin(), vertices.end(), 0);
  QuadraticPresentation p{GradedQuiver(vertices), {}};
  std::vector<std::vector<ArrowIndex>> arrow(data.m, std::vector<ArrowIndex>(data.n()));
  for (int i = 0; i < data.n(); ++i) {
    for (int j = 0; j < data.m; ++j) {
      const int t = (j + data.weights[i]) % data.m;
      arrow[j][i] = p.quiver.add_arrow(mckay_label(j, Subset{1} << i, t), j, t, 0, 1);
    }
  }
  for (int j = 0; j < data.m; ++j) {
    for (int k = 0; k < data.n(); ++k) {
      for (int l = k + 1; l < data.n(); ++l) {
        const int via_k = (j + data.weights[k]) % data.m;
        const int via_l = (j + data.weights[l]) % data.m;
        const std::vector<ArrowIndex> kl{arrow[j][k], arrow[via_k][l]}, lk{arrow[j][l], arrow[via_l][k]};
        Element r(Path::from_arrows(p.quiver, j, kl));
        r.add_term(Path::from_arrows(p.quiver, j, lk), -1);
        p.relators.push_back(std::move(r));
      }
    }
  }
  return p;
}

DgModel delete_vertex(const DgModel& model, VertexId v) {
  const GradedQuiver& old = model.quiver();
  if (!old.has_vertex(v)) throw InvalidInput("delete_vertex: unknown vertex " + std::to_string(v));
  std::vector<VertexId> vertices;
  for (VertexId u : old.vertices()) {
    if (u != v) vertices.push_back(u);
  }
  GradedQuiver q(vertices);
  std::vector<std::optional<ArrowIndex>> map(old.arrow_count());
  for (ArrowIndex a = 0; a < old.arrow_count(); ++a) {
    const Arrow& arr = old.arrow(a);
    if (arr.source == v || arr.target == v) continue;
    map[a] = q.add_arrow(arr);
  }
  std::vector<Element> images(q.arrow_count());
  for (ArrowIndex a = 0; a < old.arrow_count(); ++a) {
    if (map[a]) images[*map[a]] = transport(model.differential.on_arrow(a), q, map);
  }
  DgModel out{Differential(std::move(q), std::move(images)), model.provenance, model.truncated_at, model.adams_graded};
  const int bound = out.truncated_at.value_or(std::numeric_limits<int>::max());
  if (!check_d_squared(out.differential, std::max(bound, out.quiver().max_adeg())).passed) {
    throw InternalError("vertex deletion produced a differential with d^2 != 0");
  }
  return out;
}

}  // namespace dgq
