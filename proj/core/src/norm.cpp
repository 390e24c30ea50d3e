#include "qlcft/norm.hpp"

#include "qlcft/arith.hpp"
#include "qlcft/error.hpp"

#include <algorithm>
#include <functional>

namespace qlcft {

namespace {

std::map<Prime, PrimeComponent> full_pi2(const FieldSpec& spec) {
  std::map<Prime, PrimeComponent> out;
  for (Prime p : spec.pi2()) out.emplace(p, PrimeComponent::full(p, 2));
  return out;
}

void fill_pi2(const FieldSpec& spec, std::map<Prime, PrimeComponent>& target,
              const std::map<Prime, PrimeComponent>& given) {
  for (const auto& [p, comp] : given) {
    if (!spec.pi2().count(p))
      throw ValidationError("norm subgroup component at " + std::to_string(p) +
                                ", which is not a pi2 prime",
                            p);
    if (comp.prime() != p || comp.rank() != 2)
      throw ValidationError("norm subgroup component at " + std::to_string(p) +
                                " must be a rank-2 module over the same prime",
                            p);
    if (comp.index_exponent() > spec.level(p))
      throw LevelError(p, spec.level(p), comp.index_exponent());
    target.insert_or_assign(p, comp);
  }
}

std::int64_t product_of_indices(const std::map<Prime, PrimeComponent>& comps) {
  std::int64_t n = 1;
  for (const auto& [p, c] : comps) n *= c.index();
  return n;
}

const PrimeComponent& lookup(const std::map<Prime, PrimeComponent>& comps, Prime p) {
  auto it = comps.find(p);
  if (it == comps.end())
    throw ValidationError("no norm component at prime " + std::to_string(p), p);
  return it->second;
}

} // namespace

NormSubgroup NormSubgroup::full(const FieldSpec& spec) {
  NormSubgroup u;
  u.components_ = full_pi2(spec);
  return u;
}

NormSubgroup NormSubgroup::make(const FieldSpec& spec, int two_part, ComponentMap components) {
  if (two_part != 1 && two_part != 2)
    throw ValidationError("two_part must be 1 or 2, got " + std::to_string(two_part));
  NormSubgroup u = full(spec);
  u.two_part_ = two_part;
  fill_pi2(spec, u.components_, components);
  return u;
}

const PrimeComponent& NormSubgroup::component(Prime p) const { return lookup(components_, p); }

std::int64_t NormSubgroup::index() const { return two_part_ * product_of_indices(components_); }

bool operator<(const NormSubgroup& l, const NormSubgroup& r) {
  if (l.two_part_ != r.two_part_) return l.two_part_ < r.two_part_;
  return l.components_ < r.components_;
}

NormSubgroupE1 NormSubgroupE1::full(const FieldSpec& spec) {
  NormSubgroupE1 u;
  u.components_ = full_pi2(spec);
  return u;
}

NormSubgroupE1 NormSubgroupE1::make(const FieldSpec& spec, ComponentMap components) {
  NormSubgroupE1 u = full(spec);
  fill_pi2(spec, u.components_, components);
  return u;
}

const PrimeComponent& NormSubgroupE1::component(Prime p) const { return lookup(components_, p); }

std::int64_t NormSubgroupE1::index() const { return product_of_indices(components_); }

NormSubgroup norm_group(const FieldSpec& spec, const FiniteExtension& ext) {
  NormSubgroup::ComponentMap comps;
  for (Prime p : spec.pi2()) comps.emplace(p, ext.component(p));
  return NormSubgroup::make(spec, ext.is_real() ? 1 : 2, std::move(comps));
}

std::int64_t index(const FieldSpec&, const NormSubgroup& u) { return u.index(); }

GroupShape quotient_shape(const FieldSpec&, const NormSubgroup& u) {
  GroupShape shape = GroupShape::from_cyclic({u.two_part()});
  for (const auto& [p, comp] : u.components())
    shape = direct_product(shape, component_quotient_shape(comp));
  return shape;
}

NormSubgroup meet(const FieldSpec& spec, const NormSubgroup& u, const NormSubgroup& v) {
  NormSubgroup::ComponentMap comps;
  for (const auto& [p, cu] : u.components())
    comps.emplace(p, component_intersection(cu, v.component(p), spec.level(p)));
  return NormSubgroup::make(spec, std::max(u.two_part(), v.two_part()), std::move(comps));
}

NormSubgroup join(const FieldSpec& spec, const NormSubgroup& u, const NormSubgroup& v) {
  NormSubgroup::ComponentMap comps;
  for (const auto& [p, cu] : u.components()) comps.emplace(p, component_sum(cu, v.component(p)));
  return NormSubgroup::make(spec, std::min(u.two_part(), v.two_part()), std::move(comps));
}

bool contains(const NormSubgroup& u, const NormSubgroup& v) {
  if (u.two_part() > v.two_part()) return false;
  for (const auto& [p, cu] : u.components())
    if (!component_contains(cu, v.component(p))) return false;
  return true;
}

FiniteExtension class_field_of(const FieldSpec& spec, const NormSubgroup& u) {
  return FiniteExtension::make(spec, u.two_part() == 2 ? Reality::Nonreal : Reality::Real,
                               u.components());
}

FiniteExtension cl_of(const FieldSpec& spec, const FiniteExtension& ext) {
  return class_field_of(spec, norm_group(spec, ext));
}

FiniteExtension maximal_abelian_subextension(const FieldSpec& spec, const FiniteExtension& ext) {
  return intersect(ext, FiniteExtension::imaginary_base(spec));
}

bool class_field_is_abelian_part(const FieldSpec& spec, const FiniteExtension& ext) {
  return cl_of(spec, ext) == maximal_abelian_subextension(spec, ext);
}

NormGroupsOfIndex norm_groups_of_index(const FieldSpec& spec, std::int64_t n) {
  if (n < 1) throw ValidationError("index must be a positive integer");
  NormGroupsOfIndex out;
  for (Prime p : spec.pi1())
    if (n % p == 0) {
      out.reason = "index divisible by pi1 prime " + std::to_string(p);
      return out;
    }
  if (n % 4 == 0) {
    out.reason = "index divisible by 4";
    return out;
  }
  std::int64_t rest = n % 2 == 0 ? n / 2 : n;
  std::map<Prime, int> exps;
  for (Prime p : spec.pi2()) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    exps[p] = e;
  }
  if (rest != 1) {
    out.reason = "index divisible by a prime outside Pi(E)";
    return out;
  }
  for (const auto& [p, e] : exps)
    if (e > spec.level(p)) {
      out.reason = "index exponent " + std::to_string(e) + " at prime " + std::to_string(p) +
                   " exceeds level " + std::to_string(spec.level(p));
      return out;
    }

  const int two_part = n % 2 == 0 ? 2 : 1;
  std::vector<std::pair<Prime, std::vector<PrimeComponent>>> choices;
  for (const auto& [p, e] : exps) {
    std::vector<PrimeComponent> exact;
    for (const PrimeComponent& c : enumerate_components(p, 2, e))
      if (c.index_exponent() == e) exact.push_back(c);
    choices.push_back({p, std::move(exact)});
  }
  NormSubgroup::ComponentMap current;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == choices.size()) {
      out.groups.push_back(NormSubgroup::make(spec, two_part, current));
      return;
    }
    for (const PrimeComponent& c : choices[i].second) {
      current.insert_or_assign(choices[i].first, c);
      walk(i + 1);
    }
  };
  walk(0);
  std::sort(out.groups.begin(), out.groups.end());
  return out;
}

NormSubgroupE1 norm_group_over_e1(const FieldSpec& spec, const FiniteExtension& ext) {
  NormSubgroupE1::ComponentMap comps;
  for (Prime p : spec.pi2()) comps.emplace(p, ext.component(p));
  return NormSubgroupE1::make(spec, std::move(comps));
}

NormSubgroup restrict_to_base(const FieldSpec& spec, const NormSubgroupE1& u1, bool nonreal) {
  return NormSubgroup::make(spec, nonreal ? 2 : 1, u1.components());
}

NormSubgroupE1 extend_to_e1(const FieldSpec& spec, const NormSubgroup& u) {
  return NormSubgroupE1::make(spec, u.components());
}

GroupShape quotient_shape_e1(const FieldSpec&, const NormSubgroupE1& u1) {
  GroupShape shape;
  for (const auto& [p, comp] : u1.components())
    shape = direct_product(shape, component_quotient_shape(comp));
  return shape;
}

} // namespace qlcft
