#pragma once

#include "qlcft/field_spec.hpp"
#include "qlcft/group_shape.hpp"
#include "qlcft/hermite.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qlcft {

/// A finite-index Z_p-submodule of Z_p^rank in canonical form.
///
/// rank 1: p^a Z_p.
/// rank 2: the span of (p^a, c) and (0, p^b) with 0 <= c < p^b. Every
/// finite-index submodule of Z_p^2 has exactly one such basis (its Hermite
/// form), and its index is p^(a+b).
class PrimeComponent {
public:
  static PrimeComponent full(Prime p, int rank);
  static PrimeComponent cyclic(Prime p, int a);
  static PrimeComponent planar(Prime p, int a, int b, std::int64_t c);

  Prime prime() const noexcept { return p_; }
  int rank() const noexcept { return rank_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  std::int64_t c() const noexcept { return c_; }

  int index_exponent() const noexcept { return a_ + b_; }
  std::int64_t index() const;
  bool is_full() const noexcept { return a_ == 0 && b_ == 0; }

  /// Canonical basis rows; rank x rank, upper triangular.
  IntMatrix basis() const;

  /// Membership of an integer vector of length rank().
  bool contains(std::span<const std::int64_t> v) const;

  std::string to_string() const;

  friend auto operator<=>(const PrimeComponent&, const PrimeComponent&) = default;

private:
  PrimeComponent(Prime p, int rank, int a, int b, std::int64_t c)
      : p_(p), rank_(rank), a_(a), b_(b), c_(c) {}

  Prime p_ = 0;
  int rank_ = 1;
  int a_ = 0;
  int b_ = 0; // always 0 in rank 1
  std::int64_t c_ = 0;
};

/// Canonical form of the submodule of Z_p^{c(p)} spanned by `generators`
/// (each of length c(p)). Throws ValidationError when p is not in pi1 u pi2
/// or a generator has the wrong length, ZeroModuleError for infinite index,
/// and LevelError (carrying the required level) when the index exponent
/// exceeds k_p.
PrimeComponent canonical_component(const FieldSpec& spec, Prime p,
                                   std::span<const IntRow> generators);

/// Canonical form without a level bound; still rejects infinite index.
PrimeComponent canonical_component_unbounded(Prime p, int rank,
                                             std::span<const IntRow> generators);

/// A + B.
PrimeComponent component_sum(const PrimeComponent& x, const PrimeComponent& y);

/// A n B. Throws LevelError when the index exponent of the result exceeds
/// `level`.
PrimeComponent component_intersection(const PrimeComponent& x, const PrimeComponent& y,
                                      int level);

/// inner is a subset of outer.
bool component_contains(const PrimeComponent& outer, const PrimeComponent& inner);

/// Invariant factors of Z_p^rank / A.
GroupShape component_quotient_shape(const PrimeComponent& x);

/// All submodules with index exponent <= max_exponent, ordered by index
/// exponent and then canonical data.
std::vector<PrimeComponent> enumerate_components(Prime p, int rank, int max_exponent);

} // namespace qlcft
