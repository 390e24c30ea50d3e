#include "qlcft/group_shape.hpp"

#include "qlcft/arith.hpp"
#include "qlcft/error.hpp"

#include <algorithm>
#include <map>

namespace qlcft {

GroupShape::GroupShape(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw ValidationError("invariant factors must be at least 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw ValidationError("invariant factors must form a divisibility chain");
  }
}

GroupShape GroupShape::from_cyclic(const std::vector<std::int64_t>& orders) {
  // Split into prime-power parts, then recombine the largest powers of every
  // prime into the last factor, the next largest into the one before, etc.
  std::map<std::int64_t, std::vector<std::int64_t>> powers;
  for (std::int64_t d : orders) {
    if (d < 1) throw ValidationError("cyclic orders must be positive");
    for (std::int64_t p : prime_factors(d)) {
      std::int64_t q = 1;
      while (d % p == 0) {
        d /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
  }
  std::size_t r = 0;
  for (auto& [p, qs] : powers) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    r = std::max(r, qs.size());
  }
  std::vector<std::int64_t> factors(r, 1);
  for (auto& [p, qs] : powers)
    for (std::size_t i = 0; i < qs.size(); ++i) factors[r - 1 - i] *= qs[i];
  GroupShape shape;
  shape.factors_ = std::move(factors);
  return shape;
}

std::int64_t GroupShape::order() const {
  std::int64_t n = 1;
  for (std::int64_t d : factors_) n *= d;
  return n;
}

std::string GroupShape::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "C" + std::to_string(factors_[i]);
  }
  return s;
}

GroupShape direct_product(const GroupShape& a, const GroupShape& b) {
  std::vector<std::int64_t> all = a.factors();
  all.insert(all.end(), b.factors().begin(), b.factors().end());
  return GroupShape::from_cyclic(all);
}

} // namespace qlcft
