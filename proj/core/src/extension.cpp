#include "qlcft/extension.hpp"

#include "qlcft/arith.hpp"
#include "qlcft/error.hpp"

#include <algorithm>
#include <functional>

namespace qlcft {

FiniteExtension FiniteExtension::base(const FieldSpec& spec) {
  FiniteExtension e;
  for (Prime p : spec.odd_primes()) e.components_.emplace(p, PrimeComponent::full(p, spec.rank(p)));
  return e;
}

FiniteExtension FiniteExtension::imaginary_base(const FieldSpec& spec) {
  return base(spec).with_reality(Reality::Nonreal);
}

FiniteExtension FiniteExtension::make(const FieldSpec& spec, Reality reality,
                                      ComponentMap components) {
  FiniteExtension e = base(spec);
  e.reality_ = reality;
  for (auto& [p, comp] : components) {
    if (comp.prime() != p)
      throw ValidationError("component keyed by " + std::to_string(p) + " is over prime " +
                                std::to_string(comp.prime()),
                            p);
    if (!e.components_.count(p))
      throw ValidationError("prime " + std::to_string(p) + " is in neither pi1 nor pi2", p);
    if (comp.rank() != spec.rank(p))
      throw ValidationError("component at prime " + std::to_string(p) + " has rank " +
                                std::to_string(comp.rank()) + ", expected " +
                                std::to_string(spec.rank(p)),
                            p);
    if (comp.index_exponent() > spec.level(p))
      throw LevelError(p, spec.level(p), comp.index_exponent());
    e.components_.insert_or_assign(p, comp);
  }
  return e;
}

const PrimeComponent& FiniteExtension::component(Prime p) const {
  auto it = components_.find(p);
  if (it == components_.end())
    throw ValidationError("extension has no component at prime " + std::to_string(p), p);
  return it->second;
}

FiniteExtension FiniteExtension::with_reality(Reality r) const {
  FiniteExtension e = *this;
  e.reality_ = r;
  return e;
}

bool operator<(const FiniteExtension& l, const FiniteExtension& r) {
  if (l.reality_ != r.reality_) return l.reality_ < r.reality_;
  return l.components_ < r.components_;
}

namespace {

void check_compatible(const FiniteExtension& x, const FiniteExtension& y) {
  if (x.components().size() != y.components().size() ||
      !std::equal(x.components().begin(), x.components().end(), y.components().begin(),
                  [](const auto& l, const auto& r) { return l.first == r.first; }))
    throw ValidationError("extensions belong to different field specifications");
}

} // namespace

std::int64_t degree(const FiniteExtension& ext) {
  std::int64_t d = ext.is_real() ? 1 : 2;
  for (const auto& [p, comp] : ext.components()) d *= comp.index();
  return d;
}

bool is_normal(const FiniteExtension& ext) { return !ext.is_real() || degree(ext) == 1; }

FiniteExtension compositum(const FieldSpec& spec, const FiniteExtension& x,
                           const FiniteExtension& y) {
  check_compatible(x, y);
  FiniteExtension::ComponentMap comps;
  for (const auto& [p, cx] : x.components())
    comps.emplace(p, component_intersection(cx, y.component(p), spec.level(p)));
  const Reality r = x.is_real() && y.is_real() ? Reality::Real : Reality::Nonreal;
  return FiniteExtension::make(spec, r, std::move(comps));
}

FiniteExtension intersect(const FiniteExtension& x, const FiniteExtension& y) {
  check_compatible(x, y);
  // Sums never raise the index, so the level bound holds automatically.
  FiniteExtension::ComponentMap comps;
  for (const auto& [p, cx] : x.components()) comps.emplace(p, component_sum(cx, y.component(p)));
  const Reality r = !x.is_real() && !y.is_real() ? Reality::Nonreal : Reality::Real;
  return FiniteExtension(r, std::move(comps));
}

bool embeds(const FiniteExtension& x, const FiniteExtension& y) {
  check_compatible(x, y);
  if (!x.is_real() && y.is_real()) return false;
  for (const auto& [p, cx] : x.components())
    if (!component_contains(cx, y.component(p))) return false;
  return true;
}

FiniteExtension adjoin_i(const FiniteExtension& ext) { return ext.with_reality(Reality::Nonreal); }

FiniteExtension odd_part(const FiniteExtension& ext) { return ext.with_reality(Reality::Real); }

FiniteExtension normal_closure(const FiniteExtension& ext) {
  return degree(ext) == 1 ? ext : adjoin_i(ext);
}

GaloisStructure galois_shape(const FiniteExtension& ext) {
  GroupShape shape;
  for (const auto& [p, comp] : ext.components())
    shape = direct_product(shape, component_quotient_shape(comp));
  return {shape, !ext.is_real()};
}

LevelMap required_levels(const FieldSpec& spec, std::int64_t max_degree, ExtensionFilter filter) {
  if (max_degree < 1) throw ValidationError("max_degree must be at least 1");
  LevelMap out;
  const PrimeSet& primes = filter == ExtensionFilter::All ? spec.odd_primes() : spec.pi2();
  for (Prime p : primes) out[p] = std::max(1, floor_log(p, max_degree));
  return out;
}

std::vector<FiniteExtension> enumerate_extensions(const FieldSpec& spec, std::int64_t max_degree,
                                                  ExtensionFilter filter) {
  const LevelMap need = required_levels(spec, max_degree, filter);
  for (const auto& [p, k] : need)
    if (spec.level(p) < k) throw LevelError(p, spec.level(p), k);

  std::vector<std::pair<Prime, std::vector<PrimeComponent>>> choices;
  for (Prime p : spec.odd_primes()) {
    if (filter == ExtensionFilter::ClassFields && spec.pi1().count(p))
      choices.push_back({p, {PrimeComponent::full(p, 1)}});
    else
      choices.push_back({p, enumerate_components(p, spec.rank(p), floor_log(p, max_degree))});
  }

  std::vector<FiniteExtension> out;
  for (Reality r : {Reality::Real, Reality::Nonreal}) {
    const std::int64_t budget = r == Reality::Real ? max_degree : max_degree / 2;
    if (budget < 1) continue;
    FiniteExtension::ComponentMap current;
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t deg) {
      if (i == choices.size()) {
        out.push_back(FiniteExtension::make(spec, r, current));
        return;
      }
      const auto& [p, comps] = choices[i];
      for (const PrimeComponent& c : comps) {
        if (c.index() > budget / deg) continue;
        current.insert_or_assign(p, c);
        walk(i + 1, deg * c.index());
      }
    };
    walk(0, 1);
  }
  std::sort(out.begin(), out.end(), [](const FiniteExtension& l, const FiniteExtension& r) {
    const std::int64_t dl = degree(l), dr = degree(r);
    if (dl != dr) return dl < dr;
    return l < r;
  });
  return out;
}

const char* to_string(SigmaClass s) {
  switch (s) {
  case SigmaClass::Sigma0: return "SIGMA0";
  case SigmaClass::Sigma1: return "SIGMA1";
  case SigmaClass::Neither: return "NEITHER";
  }
  return "?";
}

SigmaClass sigma_class(const FieldSpec& spec, const FiniteExtension& ext) {
  for (Prime p : spec.pi1())
    if (!ext.component(p).is_full()) return SigmaClass::Neither;
  return ext.is_real() ? SigmaClass::Sigma0 : SigmaClass::Sigma1;
}

} // namespace qlcft
