#include "dgq/serialize.hpp"

#include "dgq/errors.hpp"

#include <fstream>
#include <sstream>

namespace dgq::io {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("field '") + key + "' has the wrong type");
  }
}

Rational coeff_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw InvalidInput("coefficients must be rational strings");
}

std::vector<ArrowIndex> arrow_list(const Json& j, const GradedQuiver& q) {
  if (!j.is_array()) throw InvalidInput("a path must be a list of arrow ids");
  std::vector<ArrowIndex> out;
  for (const auto& id : j) {
    if (!id.is_string()) throw InvalidInput("arrow ids must be strings");
    out.push_back(q.index_of(id.get<std::string>()));
  }
  return out;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << dump(j);
}

Json to_json(const GradedQuiver& q) {
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows()) {
    arrows.push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}, {"hdeg", a.hdeg}, {"adeg", a.adeg}, {"label", a.label}});
  }
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

GradedQuiver quiver_from_json(const Json& j) {
  GradedQuiver q(get<std::vector<VertexId>>(j, "vertices"));
  const Json arrows = j.contains("arrows") ? j.at("arrows") : Json::array();
  if (!arrows.is_array()) throw InvalidInput("'arrows' must be a list");
  for (const auto& a : arrows) {
    q.add_arrow(Arrow{get<std::string>(a, "id"), get<VertexId>(a, "source"), get<VertexId>(a, "target"),
                      a.contains("hdeg") ? get<int>(a, "hdeg") : 0, a.contains("adeg") ? get<int>(a, "adeg") : 1,
                      a.contains("label") ? get<std::string>(a, "label") : std::string{}});
  }
  return q;
}

Json to_json(const Element& u, const GradedQuiver& q) {
  Json out = Json::array();
  for (const auto& [p, c] : u) {
    Json ids = Json::array();
    for (ArrowIndex a : p.arrows()) ids.push_back(q.arrow(a).id);
    out.push_back({{"path", ids}, {"start", p.source()}, {"coeff", to_string(c)}});
  }
  return out;
}

Element element_from_json(const Json& j, const GradedQuiver& q) {
  if (!j.is_array()) throw InvalidInput("an element must be a list of terms");
  Element u;
  for (const auto& t : j) {
    const auto arrows = arrow_list(t.contains("path") ? t.at("path") : Json::array(), q);
    VertexId start = 0;
    if (t.contains("start")) {
      start = get<VertexId>(t, "start");
    } else if (!arrows.empty()) {
      start = q.arrow(arrows.front()).source;
    } else {
      throw InvalidInput("an idempotent term needs a 'start' vertex");
    }
    if (!q.has_vertex(start)) throw InvalidInput("unknown vertex " + std::to_string(start));
    if (!t.contains("coeff")) throw InvalidInput("missing field 'coeff'");
    u.add_term(Path::from_arrows(q, start, arrows), coeff_from_json(t.at("coeff")));
  }
  return u;
}

Json to_json(const DgModel& m) {
  const GradedQuiver& q = m.quiver();
  Json d = Json::object();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) d[q.arrow(a).id] = to_json(m.differential.on_arrow(a), q);
  Json out{{"quiver", to_json(q)}, {"differential", d}, {"provenance", to_string(m.provenance)}};
  out["truncated_at"] = m.truncated_at ? Json(*m.truncated_at) : Json(nullptr);
  out["adams_graded"] = m.adams_graded;
  return out;
}

DgModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("quiver")) throw InvalidInput("missing field 'quiver'");
  GradedQuiver q = quiver_from_json(j.at("quiver"));
  std::vector<Element> images(q.arrow_count());
  if (j.contains("differential")) {
    const Json& d = j.at("differential");
    if (!d.is_object()) throw InvalidInput("'differential' must map arrow ids to elements");
    for (const auto& [id, img] : d.items()) images[q.index_of(id)] = element_from_json(img, q);
  }
  DgModel m{Differential(std::move(q), std::move(images))};
  if (j.contains("provenance")) m.provenance = parse_provenance(get<std::string>(j, "provenance"));
  if (j.contains("truncated_at") && !j.at("truncated_at").is_null()) m.truncated_at = get<int>(j, "truncated_at");
  if (j.contains("adams_graded")) m.adams_graded = get<bool>(j, "adams_graded");
  return m;
}

Json to_json(const PresentedAlgebra& p) {
  Json rel = Json::array();
  for (const Element& r : p.relators) rel.push_back(to_json(r, p.quiver));
  return {{"quiver", to_json(p.quiver)}, {"relators", rel}};
}

PresentedAlgebra presentation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("quiver")) throw InvalidInput("missing field 'quiver'");
  PresentedAlgebra p{quiver_from_json(j.at("quiver")), {}};
  if (j.contains("relators")) {
    if (!j.at("relators").is_array()) throw InvalidInput("'relators' must be a list");
    for (const auto& r : j.at("relators")) p.relators.push_back(element_from_json(r, p.quiver));
  }
  p.validate();
  return p;
}

Json potential_to_json(const Superpotential& w) {
  Json out = Json::array();
  for (const auto& [p, c] : w.w) {
    Json ids = Json::array();
    for (ArrowIndex a : p.arrows()) ids.push_back(w.quiver.arrow(a).id);
    out.push_back({{"coeff", to_string(c)}, {"cycle", ids}});
  }
  return out;
}

Superpotential potential_from_json(const Json& j, const GradedQuiver& q, std::optional<int> weight) {
  if (!j.is_array()) throw InvalidInput("a potential must be a list of {coeff, cycle}");
  Element w;
  for (const auto& t : j) {
    const auto arrows = arrow_list(t.contains("cycle") ? t.at("cycle") : Json::array(), q);
    if (arrows.empty()) throw InvalidInput("a potential term needs a nonempty cycle");
    if (!t.contains("coeff")) throw InvalidInput("missing field 'coeff'");
    w.add_term(Path::from_arrows(q, q.arrow(arrows.front()).source, arrows), coeff_from_json(t.at("coeff")));
  }
  return Superpotential::make(q, w, weight);
}

Json to_json(const GeneratorMap& m) {
  Json arrows = Json::object(), vertices = Json::object();
  for (const auto& [k, v] : m.arrows) arrows[k] = v;
  for (const auto& [k, v] : m.vertices) vertices[std::to_string(k)] = v;
  return {{"arrows", arrows}, {"vertices", vertices}};
}

GeneratorMap map_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("a generator map must be an object");
  GeneratorMap m;
  if (j.contains("arrows")) m.arrows = get<std::map<std::string, std::string>>(j, "arrows");
  if (j.contains("vertices")) {
    for (const auto& [k, v] : get<std::map<std::string, VertexId>>(j, "vertices")) {
      try {
        std::size_t used = 0;
        const int from = std::stoi(k, &used);
        if (used != k.size()) throw std::invalid_argument(k);
        m.vertices[from] = v;
      } catch (const std::logic_error&) {
        throw InvalidInput("vertex keys must be integers, got '" + k + "'");
      }
    }
  }
  return m;
}

Json to_json(const CheckReport& r) {
  Json out{{"check", r.check}, {"status", r.status()}};
  if (!r.witness.empty()) out["witness"] = r.witness;
  if (!r.note.empty()) out["note"] = r.note;
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : r.parts) parts.push_back(to_json(p));
    out["parts"] = parts;
  }
  return out;
}

CheckReport report_from_json(const Json& j) {
  CheckReport r;
  r.check = get<std::string>(j, "check");
  const auto status = get<std::string>(j, "status");
  if (status != "pass" && status != "fail") throw InvalidInput("status must be 'pass' or 'fail'");
  r.passed = status == "pass";
  if (j.contains("witness")) r.witness = get<std::string>(j, "witness");
  if (j.contains("note")) r.note = get<std::string>(j, "note");
  if (j.contains("parts")) {
    for (const auto& p : j.at("parts")) r.parts.push_back(report_from_json(p));
  }
  return r;
}

Json to_json(const CohomologyTable& t) {
  Json totals = Json::array(), entries = Json::array();
  for (int h = 0; h >= t.hmin; --h) totals.push_back({{"h", h}, {"dim", t.total(h)}});
  for (const auto& [key, dim] : t.dims) {
    const auto& [h, a, s, tg] = key;
    if (dim == 0) continue;
    entries.push_back({{"h", h}, {"adeg", a}, {"source", s}, {"target", tg}, {"dim", dim}});
  }
  return {{"hmin", t.hmin}, {"adams_max", t.nadams}, {"totals", totals}, {"entries", entries}};
}

Json to_json(const OmegaReport& r) {
  return {{"degree", to_json(r.degree_check)}, {"closed", to_json(r.closed)}, {"nondegenerate", to_json(r.nondegenerate)}};
}

}  // namespace dgq::io
