#include "qlcft/json_io.hpp"

#include "qlcft/error.hpp"

#include <set>
#include <string>

namespace qlcft {
namespace {

void require_object(const Json& j, const char* what, std::set<std::string> allowed) {
  if (!j.is_object()) throw ValidationError(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key))
      throw ValidationError("unknown key \"" + key + "\" in " + what);
}

std::int64_t as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ValidationError(what + " must be an integer");
  return j.get<std::int64_t>();
}

Prime parse_prime_key(const std::string& key) {
  if (key.empty() || key.size() > 18 || key.find_first_not_of("0123456789") != std::string::npos ||
      (key.size() > 1 && key[0] == '0'))
    throw ValidationError("prime key \"" + key + "\" is not a decimal integer");
  return std::stoll(key);
}

PrimeSet parse_prime_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array of primes");
  PrimeSet out;
  for (const Json& e : j) {
    const Prime p = as_int(e, std::string("member of ") + what);
    if (!out.insert(p).second)
      throw ValidationError("prime " + std::to_string(p) + " listed twice in " + what, p);
  }
  return out;
}

Json components_to_json(const std::map<Prime, PrimeComponent>& comps) {
  Json out = Json::object();
  for (const auto& [p, c] : comps)
    if (!c.is_full()) out[std::to_string(p)] = to_json(c);
  return out;
}

std::map<Prime, PrimeComponent> components_from_json(const FieldSpec& spec, const Json& j) {
  if (!j.is_object()) throw ValidationError("components must be a JSON object");
  std::map<Prime, PrimeComponent> out;
  for (const auto& [key, value] : j.items()) {
    const Prime p = parse_prime_key(key);
    out.emplace(p, component_from_json(spec, p, value));
  }
  return out;
}

} // namespace

FieldSpec field_spec_from_json(const Json& j) {
  require_object(j, "field spec", {"pi1", "pi2", "level"});
  for (const char* key : {"pi1", "pi2", "level"})
    if (!j.contains(key)) throw ValidationError(std::string("field spec is missing \"") + key + "\"");
  const Json& level = j.at("level");
  if (!level.is_object()) throw ValidationError("level must be a JSON object");
  LevelMap levels;
  for (const auto& [key, value] : level.items()) {
    const Prime p = parse_prime_key(key);
    const std::int64_t k = as_int(value, "level of " + key);
    if (k < 1 || k > 64) throw ValidationError("level of " + key + " must be a positive integer", p);
    levels[p] = static_cast<int>(k);
  }
  return FieldSpec::make(parse_prime_list(j.at("pi1"), "pi1"), parse_prime_list(j.at("pi2"), "pi2"),
                         std::move(levels));
}

Json to_json(const FieldSpec& spec) {
  Json level = Json::object();
  for (const auto& [p, k] : spec.levels()) level[std::to_string(p)] = k;
  return Json{{"pi1", spec.pi1()}, {"pi2", spec.pi2()}, {"level", level}};
}

PrimeComponent component_from_json(const FieldSpec& spec, Prime p, const Json& j) {
  const int rank = spec.rank(p); // validates p
  const std::string where = "component " + std::to_string(p);
  if (!j.is_object()) throw ValidationError(where + " must be a JSON object", p);
  if (j.contains("generators")) {
    require_object(j, where.c_str(), {"generators"});
    const Json& gens = j.at("generators");
    if (!gens.is_array()) throw ValidationError(where + ": generators must be an array", p);
    std::vector<IntRow> rows;
    for (const Json& g : gens) {
      if (!g.is_array() || g.size() != static_cast<std::size_t>(rank))
        throw ValidationError(where + ": each generator needs " + std::to_string(rank) + " entries", p);
      IntRow row;
      for (const Json& x : g) row.push_back(as_int(x, where + " generator entry"));
      rows.push_back(std::move(row));
    }
    return canonical_component(spec, p, rows);
  }
  if (rank == 1) {
    require_object(j, where.c_str(), {"exp"});
    if (!j.contains("exp")) throw ValidationError(where + " needs \"exp\"", p);
    const std::int64_t a = as_int(j.at("exp"), where + " exp");
    if (a < 0 || a > 62) throw ValidationError(where + " exp out of range", p);
    return PrimeComponent::cyclic(p, static_cast<int>(a));
  }
  require_object(j, where.c_str(), {"a", "b", "c"});
  for (const char* key : {"a", "b", "c"})
    if (!j.contains(key)) throw ValidationError(where + " needs \"" + key + "\"", p);
  const std::int64_t a = as_int(j.at("a"), where + " a");
  const std::int64_t b = as_int(j.at("b"), where + " b");
  if (a < 0 || b < 0 || a > 62 || b > 62) throw ValidationError(where + " exponents out of range", p);
  return PrimeComponent::planar(p, static_cast<int>(a), static_cast<int>(b), as_int(j.at("c"), where + " c"));
}

Json to_json(const PrimeComponent& comp) {
  if (comp.rank() == 1) return Json{{"exp", comp.a()}};
  return Json{{"a", comp.a()}, {"b", comp.b()}, {"c", comp.c()}};
}

FiniteExtension extension_from_json(const FieldSpec& spec, const Json& j) {
  require_object(j, "extension", {"real", "components"});
  if (!j.contains("real") || !j.at("real").is_boolean())
    throw ValidationError("extension needs a boolean \"real\"");
  const Reality r = j.at("real").get<bool>() ? Reality::Real : Reality::Nonreal;
  auto comps = j.contains("components") ? components_from_json(spec, j.at("components"))
                                        : FiniteExtension::ComponentMap{};
  return FiniteExtension::make(spec, r, std::move(comps));
}

Json to_json(const FiniteExtension& ext) {
  return Json{{"real", ext.is_real()}, {"components", components_to_json(ext.components())}};
}

NormSubgroup norm_subgroup_from_json(const FieldSpec& spec, const Json& j) {
  require_object(j, "norm subgroup", {"two_part", "components"});
  if (!j.contains("two_part")) throw ValidationError("norm subgroup needs \"two_part\"");
  const std::int64_t two = as_int(j.at("two_part"), "two_part");
  if (two != 1 && two != 2) throw ValidationError("two_part must be 1 or 2");
  auto comps = j.contains("components") ? components_from_json(spec, j.at("components"))
                                        : NormSubgroup::ComponentMap{};
  return NormSubgroup::make(spec, static_cast<int>(two), std::move(comps));
}

Json to_json(const NormSubgroup& u) {
  return Json{{"two_part", u.two_part()}, {"components", components_to_json(u.components())}};
}

NormSubgroupE1 norm_subgroup_e1_from_json(const FieldSpec& spec, const Json& j) {
  require_object(j, "E1-level norm subgroup", {"components"});
  auto comps = j.contains("components") ? components_from_json(spec, j.at("components"))
                                        : NormSubgroupE1::ComponentMap{};
  return NormSubgroupE1::make(spec, std::move(comps));
}

Json to_json(const NormSubgroupE1& u) {
  return Json{{"components", components_to_json(u.components())}};
}

Json to_json(const GroupShape& shape) { return Json(shape.factors()); }

Json to_json(const AdmissiblePair& pair) { return Json{{"nE", pair.n_e}, {"nE1", pair.n_e1}}; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

} // namespace qlcft
