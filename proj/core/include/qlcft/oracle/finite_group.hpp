#pragma once

// Brute-force finite abelian groups. Subgroups are explicit element sets;
// nothing here uses Hermite forms or the lattice algebra, so results can be
// compared against the closed-form modules.

#include "qlcft/group_shape.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qlcft::oracle {

using Element = std::uint32_t;

/// Z/m1 x ... x Z/mr with elements numbered in mixed radix (first factor
/// varies slowest).
class FiniteAbelianGroup {
public:
  static constexpr std::uint64_t max_order = std::uint64_t{1} << 24;

  /// Cyclic factor orders in any order; 1s are allowed. Throws BudgetError
  /// above max_order.
  explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli);
  static FiniteAbelianGroup from_shape(const GroupShape& shape);

  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
  std::size_t arity() const noexcept { return moduli_.size(); }
  std::uint64_t order() const noexcept { return order_; }

  Element encode(std::span<const std::int64_t> coords) const;
  std::vector<std::int64_t> decode(Element x) const;

  Element add(Element x, Element y) const;
  Element negate(Element x) const;
  Element scale(std::int64_t k, Element x) const;
  std::int64_t element_order(Element x) const;

private:
  std::vector<std::int64_t> moduli_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t order_ = 1;
};

/// A subset of a group as a bitset.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::uint64_t universe) : bits_((universe + 63) / 64, 0) {}

  bool contains(Element x) const { return (bits_[x >> 6] >> (x & 63)) & 1U; }
  bool insert(Element x);
  std::uint64_t size() const noexcept { return size_; }

  bool is_subset_of(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;

  template <typename F> void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        const int bit = __builtin_ctzll(word);
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const noexcept { return bits_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet& l, const ElementSet& r) { return l.bits_ == r.bits_; }
  friend bool operator<(const ElementSet& l, const ElementSet& r) { return l.bits_ < r.bits_; }

private:
  std::vector<std::uint64_t> bits_;
  std::uint64_t size_ = 0;
};

/// A subgroup with the generators it was built from.
struct Subgroup {
  ElementSet elements;
  std::vector<Element> generators;

  std::uint64_t order() const noexcept { return elements.size(); }
};

/// The subgroup generated by `generators`.
Subgroup span(const FiniteAbelianGroup& g, std::span<const Element> generators);

/// Whole group and trivial subgroup.
Subgroup whole(const FiniteAbelianGroup& g);
Subgroup trivial(const FiniteAbelianGroup& g);

/// H + K, as a union of cosets of H.
Subgroup subgroup_sum(const FiniteAbelianGroup& g, const Subgroup& h, const Subgroup& k);

/// H n K.
Subgroup subgroup_intersection(const Subgroup& h, const Subgroup& k);

/// nG.
Subgroup multiples(const FiniteAbelianGroup& g, std::int64_t n);

/// Preimage of H under a homomorphism G -> target given elementwise.
template <typename Map>
Subgroup preimage(const FiniteAbelianGroup& g, const Subgroup& h, Map&& f) {
  Subgroup out{ElementSet(g.order()), {}};
  for (Element x = 0; x < g.order(); ++x)
    if (h.elements.contains(f(x))) out.elements.insert(x);
  return out;
}

std::uint64_t subgroup_index(const FiniteAbelianGroup& g, const Subgroup& h);

/// Invariant factors of G/H, found by counting |(G/H)[p^j]| for every prime
/// p dividing [G:H].
GroupShape quotient_shape(const FiniteAbelianGroup& g, const Subgroup& h);

/// Smallest e with eG contained in H.
std::int64_t quotient_exponent(const FiniteAbelianGroup& g, const Subgroup& h);

/// Default work budget for subgroup enumeration, in element-subgroup pairs.
inline constexpr std::uint64_t default_budget = 1'000'000;

/// Every subgroup of g exactly once, ordered by order and then by element
/// set. Built by closing the trivial group under sums with cyclic subgroups
/// of prime-power order and deduplicating by element set. Throws
/// BudgetError when order(g) times the number of subgroups found exceeds
/// `budget`.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g,
                                          std::uint64_t budget = default_budget);

} // namespace qlcft::oracle
