#pragma once

#include "dgq/cy_structure.hpp"
#include "dgq/ginzburg.hpp"
#include "dgq/homology.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace dgq::io {

/// Insertion-ordered so that parse → dump reproduces our own output exactly.
using Json = nlohmann::ordered_json;

/// Two-space indent plus a trailing newline.
std::string dump(const Json& j);
/// Throws InvalidInput on malformed JSON.
Json parse(std::string_view text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

Json to_json(const GradedQuiver& q);
GradedQuiver quiver_from_json(const Json& j);

/// [{"path": [ids], "start": v, "coeff": "p/q"}] in canonical term order.
Json to_json(const Element& u, const GradedQuiver& q);
Element element_from_json(const Json& j, const GradedQuiver& q);

/// {"quiver", "differential": {id: element}, "provenance", "truncated_at", "adams_graded"}.
Json to_json(const DgModel& m);
DgModel model_from_json(const Json& j);

/// {"quiver", "relators": [element]}.
Json to_json(const PresentedAlgebra& p);
PresentedAlgebra presentation_from_json(const Json& j);

/// [{"coeff", "cycle": [ids]}]; the start of each cycle is its first arrow's source.
Json potential_to_json(const Superpotential& w);
Superpotential potential_from_json(const Json& j, const GradedQuiver& q, std::optional<int> weight = std::nullopt);

/// {"arrows": {from: to}, "vertices": {from: to}}; both keys optional.
Json to_json(const GeneratorMap& m);
GeneratorMap map_from_json(const Json& j);

/// {check, status, witness?, note?, parts?}
Json to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j);

Json to_json(const CohomologyTable& t);
Json to_json(const OmegaReport& r);

}  // namespace dgq::io
