#include "dgq/cy_structure.hpp"

#include "dgq/errors.hpp"

#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace dgq {

namespace {

std::unordered_map<std::string, McKayArrowKey> mckay_keys(const McKayData& data) {
  std::unordered_map<std::string, McKayArrowKey> keys;
  for (Subset s : ordered_subsets(data.n())) {
    for (int j = 0; j < data.m; ++j) {
      const int t = data.target(j, s);
      keys.emplace(mckay_label(j, s, t), McKayArrowKey{j, s, t});
    }
  }
  return keys;
}

void require_closure(const SplitModel& s) {
  if (!s.closure.passed) throw InvalidInput("closure of the ascending/descending split is violated: " + s.closure.witness);
}

std::string tilde_label(int j, Subset s, int t) {
  return "xt_" + std::to_string(j) + "_" + subset_string(s) + "_" + std::to_string(t);
}

}  // namespace

std::vector<ArrowIndex> SplitModel::ascending_arrows() const {
  std::vector<ArrowIndex> out;
  for (ArrowIndex a = 0; a < ascending.size(); ++a) {
    if (ascending[a]) out.push_back(a);
  }
  return out;
}

std::vector<ArrowIndex> SplitModel::descending_arrows() const {
  std::vector<ArrowIndex> out;
  for (ArrowIndex a = 0; a < ascending.size(); ++a) {
    if (!ascending[a]) out.push_back(a);
  }
  return out;
}

DgModel SplitModel::ascending_subalgebra() const {
  const GradedQuiver& full = model.quiver();
  GradedQuiver q(full.vertices());
  std::vector<std::optional<ArrowIndex>> map(full.arrow_count());
  for (ArrowIndex a : ascending_arrows()) map[a] = q.add_arrow(full.arrow(a));
  std::vector<Element> images(q.arrow_count());
  for (ArrowIndex a : ascending_arrows()) {
    images[*map[a]] = transport(model.differential.on_arrow(a), q, map);
  }
  return DgModel{Differential(std::move(q), std::move(images)), model.provenance, model.truncated_at, model.adams_graded};
}

SplitModel split(const DgModel& deleted, const McKayData& data) {
  McKayData::make(data.m, data.weights);
  const GradedQuiver& q = deleted.quiver();
  if (q.has_vertex(0)) throw InvalidInput("split expects the McKay model with vertex 0 deleted");
  const auto keys = mckay_keys(data);
  SplitModel out{deleted, data, {}, {}, CheckReport::pass("closure")};
  for (const Arrow& a : q.arrows()) {
    auto it = keys.find(a.id);
    if (it == keys.end()) throw InvalidInput("arrow '" + a.id + "' is not an arrow of the McKay model");
    out.keys.push_back(it->second);
    out.ascending.push_back(it->second.target > it->second.source);
  }
  out.closure.note = "d(ascending) stays ascending; d(descending) has exactly one descending factor per term";
  for (ArrowIndex a = 0; a < q.arrow_count() && out.closure.passed; ++a) {
    for (const auto& [p, c] : deleted.differential.on_arrow(a)) {
      std::size_t desc = 0;
      for (ArrowIndex b : p.arrows()) desc += out.ascending[b] ? 0 : 1;
      const bool ok = out.ascending[a] ? desc == 0 : desc == 1;
      if (!ok) {
        out.closure.passed = false;
        out.closure.witness = "arrow " + q.arrow(a).id + ": a term of its differential has " + std::to_string(desc) +
                              " descending factors";
        break;
      }
    }
  }
  return out;
}

PresentedAlgebra build_c(const SplitModel& s) {
  require_closure(s);
  const McKayData& d = s.data;
  std::vector<VertexId> vertices;
  for (int j = 1; j < d.m; ++j) vertices.push_back(j);
  PresentedAlgebra c{GradedQuiver(vertices), {}};
  std::map<std::pair<int, int>, ArrowIndex> arrow;  // (j, i) → x_{j,i,j+a_i}
  for (int i = 0; i < d.n(); ++i) {
    for (int j = 1; j < d.m; ++j) {
      const int t = j + d.weights[i];
      if (t <= d.m - 1) arrow[{j, i}] = c.quiver.add_arrow(mckay_label(j, Subset{1} << i, t), j, t, 0, 1);
    }
  }
  for (int j = 1; j < d.m; ++j) {
    for (int k = 0; k < d.n(); ++k) {
      for (int l = k + 1; l < d.n(); ++l) {
        const int jk = j + d.weights[k], jl = j + d.weights[l], end = j + d.weights[k] + d.weights[l];
        if (jk > d.m - 1 || jl > d.m - 1 || end > d.m - 1) continue;
        const std::vector<ArrowIndex> kl{arrow.at({j, k}), arrow.at({jk, l})}, lk{arrow.at({j, l}), arrow.at({jl, k})};
        Element r(Path::from_arrows(c.quiver, j, kl));
        r.add_term(Path::from_arrows(c.quiver, j, lk), -1);
        c.relators.push_back(std::move(r));
      }
    }
  }
  return c;
}

CheckReport check_c_koszul_and_model(const SplitModel& s, int nadams, const HomologyOptions& opts) {
  require_closure(s);
  if (nadams < 1) throw InvalidInput("check_c_koszul_and_model needs nadams >= 1");
  CheckReport report = CheckReport::pass("koszul_truncated", "Koszulity of C and minimality of the ascending subalgebra, certified up to Adams degree " +
                                                                   std::to_string(nadams));
  const PresentedAlgebra c = build_c(s);
  const DgModel asc = s.ascending_subalgebra();

  // (a) quasi-isomorphism onto C, degreewise.
  CheckReport qiso = CheckReport::pass("ascending_quasi_isomorphism");
  const CohomologyTable h = cohomology_dims(asc, 1 - nadams, nadams, opts);
  const DimensionTable cd = truncated_dims(c, nadams, opts);
  for (const auto& [key, dim] : h.dims) {
    const auto& [hd, a, src, tgt] = key;
    if (hd < 0 && dim != 0) {
      qiso = CheckReport::fail(qiso.check, "H^" + std::to_string(hd) + " nonzero at Adams degree " + std::to_string(a));
      break;
    }
  }
  if (qiso.passed) {
    for (int a = 0; a <= nadams && qiso.passed; ++a) {
      for (VertexId u : c.quiver.vertices()) {
        for (VertexId v : c.quiver.vertices()) {
          auto it = cd.find({u, v, a});
          const std::size_t expect = it == cd.end() ? 0 : it->second;
          if (h.dim(0, a, u, v) != expect) {
            qiso = CheckReport::fail(qiso.check, "H^0 dimension " + std::to_string(h.dim(0, a, u, v)) + " != dim C = " +
                                                     std::to_string(expect) + " at (" + std::to_string(u) + "," +
                                                     std::to_string(v) + ") Adams degree " + std::to_string(a));
          }
        }
      }
    }
  }

  // (b) generator bidegrees versus J_n of C.
  CheckReport model = CheckReport::pass("minimal_model_generators");
  QuadraticPresentation qp{c.quiver, c.relators};
  std::map<std::tuple<VertexId, VertexId, int>, std::size_t> from_asc, from_jn;
  for (const Arrow& a : asc.quiver().arrows()) {
    if (a.hdeg != 1 - a.adeg) {
      model = CheckReport::fail(model.check, "arrow " + a.id + " is not in bidegree (1-n, n)");
    }
    if (a.adeg <= nadams) ++from_asc[{a.source, a.target, a.adeg}];
  }
  for (int n = 1; n <= nadams; ++n) {
    for (const Element& b : compute_jn(qp, n)) {
      const Path& lead = b.begin()->first;
      ++from_jn[{lead.source(), lead.target(), n}];
    }
  }
  if (model.passed && from_asc != from_jn) {
    std::ostringstream os;
    for (const auto& [k, v] : from_jn) {
      auto it = from_asc.find(k);
      if (it == from_asc.end() || it->second != v) {
        os << "J_" << std::get<2>(k) << " at (" << std::get<0>(k) << "," << std::get<1>(k) << ") has dimension " << v
           << " but the ascending quiver has " << (it == from_asc.end() ? 0 : it->second) << " arrows";
        break;
      }
    }
    if (os.str().empty()) os << "the ascending quiver has generators with no J_n counterpart";
    model = CheckReport::fail(model.check, os.str());
  }

  report.passed = qiso.passed && model.passed;
  if (!report.passed) report.witness = !qiso.passed ? qiso.witness : model.witness;
  report.parts = {qiso, model};
  return report;
}

OmegaTilde build_omega_tilde(const SplitModel& s) {
  require_closure(s);
  const McKayData& d = s.data;
  const GradedQuiver& base = s.model.quiver();
  GradedQuiver q(base.vertices());
  for (const Arrow& a : base.arrows()) q.add_arrow(a);

  std::map<std::pair<int, Subset>, ArrowIndex> plain;
  for (ArrowIndex a = 0; a < base.arrow_count(); ++a) plain[{s.keys[a].source, s.keys[a].subset}] = a;

  OmegaTilde out;
  std::map<std::pair<int, Subset>, ArrowIndex> tilde;
  std::vector<Subset> proper{0};
  for (Subset sub : ordered_subsets(d.n())) {
    if (sub != full_subset(d.n())) proper.push_back(sub);
  }
  for (Subset sub : proper) {
    for (int j = 1; j < d.m; ++j) {
      const int t = j + d.weight(sub);
      if (t > d.m - 1) continue;
      const ArrowIndex a = q.add_arrow(Arrow{tilde_label(j, sub, t), j, t, -subset_size(sub), subset_size(sub) + 1, {}});
      tilde[{j, sub}] = a;
      out.generators.push_back(a);
      out.generator_keys.push_back({j, sub, t});
    }
  }

  std::vector<Element> images(q.arrow_count());
  for (ArrowIndex a = 0; a < base.arrow_count(); ++a) images[a] = s.model.differential.on_arrow(a);
  for (std::size_t g = 0; g < out.generators.size(); ++g) {
    const auto [j, sub, t] = out.generator_keys[g];
    Element dx;
    // Iterate A over all subsets of S (including ∅ and S).
    for (Subset a = sub;; a = (a - 1) & sub) {
      const Subset b = sub & ~a;
      const int jm = j + d.weight(a);
      if (b != 0) {
        const int sign = (subset_size(a) % 2 == 0 ? 1 : -1) * shuffle_sign(a, b);
        const std::vector<ArrowIndex> w{tilde.at({j, a}), plain.at({jm, b})};
        dx.add_term(Path::from_arrows(q, j, w), sign);
      }
      if (a != 0) {
        const int sign = -shuffle_sign(a, b);
        const std::vector<ArrowIndex> w{plain.at({j, a}), tilde.at({jm, b})};
        dx.add_term(Path::from_arrows(q, j, w), sign);
      }
      if (a == 0) break;
    }
    images[out.generators[g]] = std::move(dx);
  }
  out.extended = DgModel{Differential(std::move(q), std::move(images)), Provenance::custom, std::nullopt, true};
  out.d_squared = check_d_squared(out.extended.differential, out.extended.quiver().max_adeg());
  return out;
}

OmegaReport build_and_check_omega(const SplitModel& s) {
  const McKayData& d = s.data;
  if (!d.satisfies_hypotheses()) throw InvalidInput(kHypothesisWarning);
  if (d.weight(full_subset(d.n())) != d.m) throw InvalidInput("weight condition sum(a_i) = m fails");
  require_closure(s);
  const OmegaTilde ot = build_omega_tilde(s);
  const GradedQuiver& q = ot.extended.quiver();
  const Subset full = full_subset(d.n());

  OmegaReport r;
  r.n = d.n();
  r.degree = 1 - d.n();
  for (std::size_t g = 0; g < ot.generators.size(); ++g) {
    const auto [j, sub, t] = ot.generator_keys[g];
    const Subset comp = full & ~sub;
    const auto dual = q.find(mckay_label(t, comp, d.target(t, comp)));
    if (!dual) {
      r.nondegenerate = CheckReport::fail("nondegenerate", "no descending arrow pairs with " + q.arrow(ot.generators[g]).id);
      continue;
    }
    const int sign = (subset_size(sub) % 2 == 1 ? 1 : -1) * shuffle_sign(sub, comp);
    r.terms.push_back({sign, ot.generators[g], *dual});
  }

  // (1) degree
  r.degree_check = CheckReport::pass("degree", "every term has homological degree " + std::to_string(r.degree));
  for (const auto& t : r.terms) {
    const int h = q.arrow(t.tilde).hdeg + q.arrow(t.dual).hdeg;
    if (h != r.degree) {
      r.degree_check = CheckReport::fail("degree", "term " + q.arrow(t.tilde).id + " (x) " + q.arrow(t.dual).id +
                                                       " has degree " + std::to_string(h));
      break;
    }
  }

  // (2) dω = 0 modulo graded commutators with the ascending subalgebra.
  Element omega;
  for (const auto& t : r.terms) {
    const std::vector<ArrowIndex> w{t.tilde, t.dual};
    omega.add_term(Path::from_arrows(q, q.arrow(t.tilde).source, w), t.sign);
  }
  std::set<ArrowIndex> tilde_set(ot.generators.begin(), ot.generators.end());
  Element d_omega;
  for (const auto& [p, c] : apply(ot.extended.differential, omega)) {
    const auto& arrows = p.arrows();
    std::size_t pos = arrows.size();
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (tilde_set.contains(arrows[i])) {
        if (pos != arrows.size()) throw InternalError("term of d(omega) with two bimodule generators");
        pos = i;
      }
    }
    if (pos == arrows.size()) throw InternalError("term of d(omega) without a bimodule generator");
    // Move the prefix u to the back: u·X ≡ (−1)^{|u||X|} X·u.
    int hu = 0;
    for (std::size_t i = 0; i < pos; ++i) hu += q.arrow(arrows[i]).hdeg;
    const int hx = p.hdeg() - hu;
    std::vector<ArrowIndex> rotated(arrows.begin() + pos, arrows.end());
    rotated.insert(rotated.end(), arrows.begin(), arrows.begin() + pos);
    const bool odd = ((hu * hx) % 2) != 0;
    d_omega.add_term(Path::from_arrows(q, q.arrow(rotated.front()).source, rotated), odd ? Rational(-c) : c);
  }
  if (d_omega.is_zero()) {
    r.closed = CheckReport::pass("closed", "d(omega) vanishes in the cyclic tensor product");
  } else {
    std::ostringstream os;
    const auto& [p, c] = *d_omega.begin();
    os << d_omega.size() << " surviving terms, e.g. (" << to_string(c) << ")";
    for (ArrowIndex a : p.arrows()) os << " " << q.arrow(a).id;
    r.closed = CheckReport::fail("closed", os.str());
  }

  // (3) perfect ±1 matching between Ω̃-generators and descending arrows.
  if (r.nondegenerate.passed) {
    r.nondegenerate = CheckReport::pass("nondegenerate", "omega pairs the bimodule generators bijectively with the descending arrows");
    std::map<ArrowIndex, int> left, right;
    for (const auto& t : r.terms) {
      ++left[t.tilde];
      ++right[t.dual];
      if (t.sign != 1 && t.sign != -1) r.nondegenerate = CheckReport::fail("nondegenerate", "coefficient is not a unit");
    }
    for (ArrowIndex g : ot.generators) {
      if (left[g] != 1) {
        r.nondegenerate = CheckReport::fail("nondegenerate", q.arrow(g).id + " appears " + std::to_string(left[g]) + " times");
      }
    }
    for (ArrowIndex a : s.descending_arrows()) {
      if (right[a] != 1) {
        r.nondegenerate = CheckReport::fail("nondegenerate", q.arrow(a).id + " appears " + std::to_string(right[a]) + " times");
      }
    }
    if (right.size() != s.descending_arrows().size()) {
      r.nondegenerate = CheckReport::fail("nondegenerate", "omega pairs with an arrow that is not descending");
    }
  }
  return r;
}

}  // namespace dgq
