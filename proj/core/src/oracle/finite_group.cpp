#include "qlcft/oracle/finite_group.hpp"

#include "qlcft/arith.hpp"
#include "qlcft/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace qlcft::oracle {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> moduli)
    : moduli_(std::move(moduli)), stride_(moduli_.size()) {
  for (std::int64_t m : moduli_) {
    if (m < 1) throw ValidationError("cyclic factor orders must be positive");
    if (order_ > max_order / static_cast<std::uint64_t>(m))
      throw BudgetError("finite group too large for the oracle", max_order + 1, max_order);
    order_ *= static_cast<std::uint64_t>(m);
  }
  std::uint64_t s = 1;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    stride_[i] = s;
    s *= static_cast<std::uint64_t>(moduli_[i]);
  }
}

FiniteAbelianGroup FiniteAbelianGroup::from_shape(const GroupShape& shape) {
  return FiniteAbelianGroup(shape.factors());
}

Element FiniteAbelianGroup::encode(std::span<const std::int64_t> coords) const {
  if (coords.size() != moduli_.size()) throw ValidationError("coordinate count mismatch");
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    x += static_cast<std::uint64_t>(mod(coords[i], moduli_[i])) * stride_[i];
  return static_cast<Element>(x);
}

std::vector<std::int64_t> FiniteAbelianGroup::decode(Element x) const {
  std::vector<std::int64_t> out(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    out[i] = static_cast<std::int64_t>(x / stride_[i]);
    x = static_cast<Element>(x % stride_[i]);
  }
  return out;
}

Element FiniteAbelianGroup::add(Element x, Element y) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const auto m = static_cast<std::uint64_t>(moduli_[i]);
    const std::uint64_t xi = (x / stride_[i]) % m;
    const std::uint64_t yi = (y / stride_[i]) % m;
    out += ((xi + yi) % m) * stride_[i];
  }
  return static_cast<Element>(out);
}

Element FiniteAbelianGroup::negate(Element x) const { return scale(-1, x); }

Element FiniteAbelianGroup::scale(std::int64_t k, Element x) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::int64_t m = moduli_[i];
    const auto xi = static_cast<std::int64_t>((x / stride_[i]) % static_cast<std::uint64_t>(m));
    const Int128 prod = static_cast<Int128>(mod(k, m)) * xi;
    out += static_cast<std::uint64_t>(prod % m) * stride_[i];
  }
  return static_cast<Element>(out);
}

std::int64_t FiniteAbelianGroup::element_order(Element x) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::int64_t m = moduli_[i];
    const auto xi = static_cast<std::int64_t>((x / stride_[i]) % static_cast<std::uint64_t>(m));
    o = std::lcm(o, m / std::gcd(m, xi));
  }
  return o;
}

bool ElementSet::insert(Element x) {
  std::uint64_t& w = bits_[x >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (w & bit) return false;
  w |= bit;
  ++size_;
  return true;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet out;
  out.bits_.resize(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out.bits_[i] = bits_[i] & other.bits_[i];
    out.size_ += static_cast<std::uint64_t>(std::popcount(out.bits_[i]));
  }
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint64_t w : bits_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

namespace {

// X + <g>: walk the multiples of g until one falls back into X.
void absorb_cyclic(const FiniteAbelianGroup& g, ElementSet& x, Element gen) {
  if (x.contains(gen)) return;
  std::vector<Element> base;
  x.for_each([&](Element e) { base.push_back(e); });
  Element shift = gen;
  while (!x.contains(shift)) {
    for (Element e : base) x.insert(g.add(e, shift));
    shift = g.add(shift, gen);
  }
}

} // namespace

Subgroup span(const FiniteAbelianGroup& g, std::span<const Element> generators) {
  Subgroup out = trivial(g);
  for (Element gen : generators) {
    absorb_cyclic(g, out.elements, gen);
    out.generators.push_back(gen);
  }
  return out;
}

Subgroup whole(const FiniteAbelianGroup& g) {
  Subgroup out{ElementSet(g.order()), {}};
  for (Element x = 0; x < g.order(); ++x) out.elements.insert(x);
  for (std::size_t i = 0; i < g.arity(); ++i) {
    std::vector<std::int64_t> e(g.arity(), 0);
    e[i] = 1;
    out.generators.push_back(g.encode(e));
  }
  return out;
}

Subgroup trivial(const FiniteAbelianGroup& g) {
  Subgroup out{ElementSet(g.order()), {}};
  out.elements.insert(0);
  return out;
}

Subgroup subgroup_sum(const FiniteAbelianGroup& g, const Subgroup& h, const Subgroup& k) {
  Subgroup out = h;
  std::vector<Element> base;
  h.elements.for_each([&](Element e) { base.push_back(e); });
  k.elements.for_each([&](Element t) {
    if (out.elements.contains(t)) return;
    for (Element e : base) out.elements.insert(g.add(e, t));
  });
  out.generators.insert(out.generators.end(), k.generators.begin(), k.generators.end());
  return out;
}

Subgroup subgroup_intersection(const Subgroup& h, const Subgroup& k) {
  return Subgroup{h.elements & k.elements, {}};
}

Subgroup multiples(const FiniteAbelianGroup& g, std::int64_t n) {
  Subgroup out = trivial(g);
  for (Element x = 0; x < g.order(); ++x) out.elements.insert(g.scale(n, x));
  return out;
}

std::uint64_t subgroup_index(const FiniteAbelianGroup& g, const Subgroup& h) {
  return g.order() / h.order();
}

namespace {

// |(G/H)[q]| for q = p^j: elements x with q*x in H, divided by |H|.
std::uint64_t torsion_count(const FiniteAbelianGroup& g, const Subgroup& h, std::int64_t q) {
  std::uint64_t n = 0;
  for (Element x = 0; x < g.order(); ++x)
    if (h.elements.contains(g.scale(q, x))) ++n;
  return n / h.order();
}

} // namespace

GroupShape quotient_shape(const FiniteAbelianGroup& g, const Subgroup& h) {
  const auto idx = static_cast<std::int64_t>(subgroup_index(g, h));
  std::vector<std::int64_t> cyclic;
  for (std::int64_t p : prime_factors(idx)) {
    std::int64_t p_part = 1;
    for (std::int64_t r = idx; r % p == 0; r /= p) p_part *= p;
    // at_least[j] = number of cyclic factors of order >= p^j.
    std::vector<int> at_least{0};
    std::uint64_t prev = 1;
    std::int64_t q = 1;
    while (true) {
      q *= p;
      const std::uint64_t t = torsion_count(g, h, q);
      at_least.push_back(floor_log(p, static_cast<std::int64_t>(t / prev)));
      prev = t;
      if (t == static_cast<std::uint64_t>(p_part)) break;
    }
    const int levels = static_cast<int>(at_least.size()) - 1;
    for (int j = 1; j <= levels; ++j) {
      const int exact = at_least[j] - (j < levels ? at_least[j + 1] : 0);
      for (int k = 0; k < exact; ++k) cyclic.push_back(ipow(p, j));
    }
  }
  return GroupShape::from_cyclic(cyclic);
}

std::int64_t quotient_exponent(const FiniteAbelianGroup& g, const Subgroup& h) {
  std::int64_t e = 1;
  for (Element x = 0; x < g.order(); ++x) {
    std::int64_t k = 1;
    Element y = x;
    while (!h.elements.contains(y)) {
      y = g.add(y, x);
      ++k;
    }
    e = std::lcm(e, k);
  }
  return e;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, std::uint64_t budget) {
  // Cyclic subgroups of prime-power order, one per subgroup.
  std::vector<Subgroup> cyclic;
  ElementSet seen(g.order());
  for (Element x = 1; x < g.order(); ++x) {
    if (seen.contains(x)) continue;
    const std::int64_t o = g.element_order(x);
    if (prime_factors(o).size() != 1) continue;
    const Element gen[] = {x};
    Subgroup c = span(g, gen);
    for (std::int64_t k = 1; k < o; ++k)
      if (std::gcd(k, o) == 1) seen.insert(g.scale(k, x));
    cyclic.push_back(std::move(c));
  }

  struct Hash {
    std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
  };
  std::unordered_map<ElementSet, std::size_t, Hash> index;
  std::vector<Subgroup> found;
  std::uint64_t work = 0;
  auto record = [&](Subgroup s) {
    if (index.count(s.elements)) return;
    work += g.order();
    if (work > budget)
      throw BudgetError("subgroup enumeration exceeds the oracle budget", work, budget);
    index.emplace(s.elements, found.size());
    found.push_back(std::move(s));
  };

  record(trivial(g));
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const Subgroup& c : cyclic) {
      if (c.generators.empty() || found[i].elements.contains(c.generators.front())) continue;
      Subgroup next = found[i];
      absorb_cyclic(g, next.elements, c.generators.front());
      next.generators.push_back(c.generators.front());
      record(std::move(next));
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& l, const Subgroup& r) {
    if (l.order() != r.order()) return l.order() < r.order();
    return l.elements < r.elements;
  });
  return found;
}

} // namespace qlcft::oracle
