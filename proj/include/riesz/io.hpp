#pragma once

#include <json.hpp>

#include "riesz/classify.hpp"
#include "riesz/conditions.hpp"
#include "riesz/interpolate.hpp"
#include "riesz/triple.hpp"

namespace riesz {

using nlohmann::json;

json field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const json& j);

json triple_to_json(const CharTriple& t);
CharTriple triple_from_json(const json& j, long bisection_cap = kDefaultBisectionCap);

json element_to_json(const CharTriple& t, const GroupElement& g);
GroupElement element_from_json(const CharTriple& t, const json& j);

struct Quadruple {
    GroupElement a1, a2, b1, b2;
};
Quadruple quadruple_from_json(const CharTriple& t, const json& j);

json report_to_json(const WellFormedReport& rep);
json report_to_json(const ConditionReport& rep);
json result_to_json(const CharTriple& t, const InterpolationResult& res);
json catalog_to_json(const std::vector<CatalogEntry>& entries);
json canon_to_json(const CanonEncoding& enc);
json equiv_to_json(const CharTriple& t1, const EquivResult& res);

json load_json_file(const std::string& path);

} // namespace riesz
