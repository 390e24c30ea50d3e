#pragma once

// JSON forms of the core values. Parsers are strict: unknown keys, wrong
// types and out-of-range data raise ValidationError with a short reason.

#include "qlcft/extension.hpp"
#include "qlcft/field_spec.hpp"
#include "qlcft/group_shape.hpp"
#include "qlcft/norm.hpp"
#include "qlcft/units.hpp"

#include <nlohmann/json.hpp>

namespace qlcft {

using Json = nlohmann::json;

/// {"pi1":[3], "pi2":[5], "level":{"3":1,"5":2}}
FieldSpec field_spec_from_json(const Json& j);
Json to_json(const FieldSpec& spec);

/// One component: {"exp":k} in rank 1, {"a":..,"b":..,"c":..} in rank 2.
/// {"generators":[[..],..]} is also accepted and canonicalized.
PrimeComponent component_from_json(const FieldSpec& spec, Prime p, const Json& j);
Json to_json(const PrimeComponent& comp);

/// {"real":true, "components":{"5":{...}}}; absent primes are full and only
/// non-full components are written.
FiniteExtension extension_from_json(const FieldSpec& spec, const Json& j);
Json to_json(const FiniteExtension& ext);

/// {"two_part":2, "components":{"5":{...}}}
NormSubgroup norm_subgroup_from_json(const FieldSpec& spec, const Json& j);
Json to_json(const NormSubgroup& u);

/// {"components":{"5":{...}}}
NormSubgroupE1 norm_subgroup_e1_from_json(const FieldSpec& spec, const Json& j);
Json to_json(const NormSubgroupE1& u);

Json to_json(const GroupShape& shape);
Json to_json(const AdmissiblePair& pair);

/// Parses text as JSON, mapping syntax errors to ValidationError.
Json parse_json(const std::string& text);

} // namespace qlcft
