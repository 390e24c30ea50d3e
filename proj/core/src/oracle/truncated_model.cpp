#include "qlcft/oracle/truncated_model.hpp"

#include "qlcft/arith.hpp"
#include "qlcft/error.hpp"

namespace qlcft::oracle {

TruncatedModel::TruncatedModel(const FieldSpec& spec, LevelMap levels)
    : spec_(spec), levels_(std::move(levels)) {
  for (Prime p : spec_.odd_primes()) {
    auto it = levels_.find(p);
    if (it == levels_.end() || it->second < 1)
      throw ValidationError("truncated model needs a positive level for prime " +
                                std::to_string(p),
                            p);
    const std::int64_t q = ipow(p, it->second);
    factors_.emplace(p, FiniteAbelianGroup(std::vector<std::int64_t>(
                            static_cast<std::size_t>(spec_.rank(p)), q)));
  }
}

Subgroup TruncatedModel::lift(const PrimeComponent& comp) const {
  // Faithful iff p^L Z_p^rank lies inside the module; then reduction mod p^L
  // is a lattice isomorphism onto the subgroups of (Z/p^L)^rank.
  const Prime p = comp.prime();
  auto faithful_at = [&](int l) {
    for (int i = 0; i < comp.rank(); ++i) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(comp.rank()), 0);
      v[static_cast<std::size_t>(i)] = ipow(p, l);
      if (!comp.contains(v)) return false;
    }
    return true;
  };
  if (!faithful_at(level(p))) {
    int need = level(p) + 1;
    while (!faithful_at(need)) ++need;
    throw LevelError(p, level(p), need);
  }
  const FiniteAbelianGroup& g = factor(p);
  std::vector<Element> gens;
  for (const IntRow& row : comp.basis()) gens.push_back(g.encode(row));
  return span(g, gens);
}

OracleExtension lift(const TruncatedModel& m, const FiniteExtension& ext) {
  OracleExtension out;
  out.real = ext.is_real();
  for (const auto& [p, comp] : ext.components()) out.parts.emplace(p, m.lift(comp));
  return out;
}

OracleNorm lift(const TruncatedModel& m, const NormSubgroup& u) {
  OracleNorm out;
  out.c2_order = u.two_part() == 1 ? 2 : 1;
  for (Prime p : m.spec().pi1()) out.parts.emplace(p, whole(m.factor(p)));
  for (const auto& [p, comp] : u.components()) out.parts.emplace(p, m.lift(comp));
  return out;
}

std::uint64_t degree(const TruncatedModel& m, const OracleExtension& x) {
  std::uint64_t d = x.real ? 1 : 2;
  for (const auto& [p, h] : x.parts) d *= subgroup_index(m.factor(p), h);
  return d;
}

OracleExtension compositum(const TruncatedModel&, const OracleExtension& x,
                           const OracleExtension& y) {
  OracleExtension out;
  out.real = x.real && y.real;
  for (const auto& [p, h] : x.parts)
    out.parts.emplace(p, subgroup_intersection(h, y.parts.at(p)));
  return out;
}

OracleExtension intersect(const TruncatedModel& m, const OracleExtension& x,
                          const OracleExtension& y) {
  OracleExtension out;
  out.real = x.real || y.real;
  for (const auto& [p, h] : x.parts)
    out.parts.emplace(p, subgroup_sum(m.factor(p), h, y.parts.at(p)));
  return out;
}

bool embeds(const OracleExtension& x, const OracleExtension& y) {
  // Field inclusion reverses subgroup inclusion; sigma in U_y forces sigma in U_x.
  if (y.real && !x.real) return false;
  for (const auto& [p, h] : x.parts)
    if (!y.parts.at(p).elements.is_subset_of(h.elements)) return false;
  return true;
}

OracleNorm norm(const TruncatedModel& m, const OracleExtension& x) {
  OracleNorm out;
  out.c2_order = x.real ? 2 : 1;
  for (const auto& [p, h] : x.parts) {
    const FiniteAbelianGroup& g = m.factor(p);
    if (m.spec().pi1().count(p)) {
      // Reciprocity is zero on pi1 factors: everything maps into h.
      out.parts.emplace(p, preimage(g, h, [](Element) { return Element{0}; }));
    } else {
      out.parts.emplace(p, preimage(g, h, [](Element e) { return e; }));
    }
  }
  return out;
}

std::uint64_t index(const TruncatedModel& m, const OracleNorm& u) {
  std::uint64_t n = static_cast<std::uint64_t>(2 / u.c2_order);
  for (const auto& [p, h] : u.parts) n *= subgroup_index(m.factor(p), h);
  return n;
}

OracleNorm meet(const OracleNorm& u, const OracleNorm& v) {
  OracleNorm out;
  out.c2_order = std::min(u.c2_order, v.c2_order);
  for (const auto& [p, h] : u.parts) out.parts.emplace(p, subgroup_intersection(h, v.parts.at(p)));
  return out;
}

OracleNorm join(const TruncatedModel& m, const OracleNorm& u, const OracleNorm& v) {
  OracleNorm out;
  out.c2_order = std::max(u.c2_order, v.c2_order);
  for (const auto& [p, h] : u.parts)
    out.parts.emplace(p, subgroup_sum(m.factor(p), h, v.parts.at(p)));
  return out;
}

bool contains(const OracleNorm& u, const OracleNorm& v) {
  if (v.c2_order > u.c2_order) return false;
  for (const auto& [p, h] : u.parts)
    if (!v.parts.at(p).elements.is_subset_of(h.elements)) return false;
  return true;
}

bool same(const OracleNorm& u, const OracleNorm& v) {
  if (u.c2_order != v.c2_order) return false;
  for (const auto& [p, h] : u.parts)
    if (!(h.elements == v.parts.at(p).elements)) return false;
  return true;
}

bool same(const OracleExtension& x, const OracleExtension& y) {
  if (x.real != y.real) return false;
  for (const auto& [p, h] : x.parts)
    if (!(h.elements == y.parts.at(p).elements)) return false;
  return true;
}

GroupShape quotient_shape(const TruncatedModel& m, const OracleNorm& u) {
  GroupShape shape = GroupShape::from_cyclic({2 / u.c2_order});
  for (const auto& [p, h] : u.parts) shape = direct_product(shape, quotient_shape(m.factor(p), h));
  return shape;
}

bool is_normal_brute_force(const TruncatedModel& m, const OracleExtension& x) {
  // A_L as one group with every odd coordinate, and U0 = U n A inside it.
  std::vector<std::int64_t> moduli;
  for (const auto& [p, g] : x.parts) {
    const auto& f = m.factor(p).moduli();
    moduli.insert(moduli.end(), f.begin(), f.end());
  }
  const FiniteAbelianGroup a(moduli);
  ElementSet u0(a.order());
  {
    // Product of the per-prime element sets, built coordinatewise.
    std::vector<std::vector<std::vector<std::int64_t>>> per_prime;
    for (const auto& [p, h] : x.parts) {
      std::vector<std::vector<std::int64_t>> coords;
      h.elements.for_each([&](Element e) { coords.push_back(m.factor(p).decode(e)); });
      per_prime.push_back(std::move(coords));
    }
    std::vector<std::int64_t> point;
    auto build = [&](auto&& self, std::size_t i) -> void {
      if (i == per_prime.size()) {
        u0.insert(a.encode(point));
        return;
      }
      for (const auto& c : per_prime[i]) {
        point.insert(point.end(), c.begin(), c.end());
        self(self, i + 1);
        point.resize(point.size() - c.size());
      }
    };
    build(build, 0);
  }

  // Elements of A_L x| C2 are pairs (a, s); (a, s)(b, t) = (a + (-1)^s b, s + t).
  struct Pair {
    Element a;
    int s;
  };
  auto mul = [&](Pair l, Pair r) {
    return Pair{a.add(l.a, l.s ? a.negate(r.a) : r.a), (l.s + r.s) % 2};
  };
  auto inv = [&](Pair l) { return l.s ? l : Pair{a.negate(l.a), 0}; };
  // U = U0 (nonreal) or U0 u U0*sigma (real).
  auto in_u = [&](Pair g) { return u0.contains(g.a) && (g.s == 0 || x.real); };

  std::vector<Pair> generators{{0, 1}};
  for (std::size_t i = 0; i < a.arity(); ++i) {
    std::vector<std::int64_t> e(a.arity(), 0);
    e[i] = 1;
    generators.push_back({a.encode(e), 0});
  }
  bool normal = true;
  u0.for_each([&](Element h) {
    if (!normal) return;
    for (int s = 0; s <= (x.real ? 1 : 0); ++s)
      for (const Pair& g : generators)
        if (!in_u(mul(mul(g, Pair{h, s}), inv(g)))) normal = false;
  });
  return normal;
}

} // namespace qlcft::oracle
