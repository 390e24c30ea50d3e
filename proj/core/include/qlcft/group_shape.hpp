#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qlcft {

/// A finite abelian group C_{d1} x ... x C_{dr} in invariant-factor form:
/// every d_i >= 2 and d_i | d_{i+1}. The trivial group has no factors.
class GroupShape {
public:
  GroupShape() = default;

  /// Validates an invariant-factor chain; throws ValidationError otherwise.
  explicit GroupShape(std::vector<std::int64_t> invariant_factors);

  /// Normalizes an arbitrary list of cyclic orders (1s allowed, any order)
  /// into invariant-factor form.
  static GroupShape from_cyclic(const std::vector<std::int64_t>& orders);

  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  bool trivial() const noexcept { return factors_.empty(); }
  std::int64_t order() const;
  std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  std::string to_string() const;

  friend auto operator<=>(const GroupShape&, const GroupShape&) = default;

private:
  std::vector<std::int64_t> factors_;
};

/// Shape of the direct product A x B.
GroupShape direct_product(const GroupShape& a, const GroupShape& b);

} // namespace qlcft
