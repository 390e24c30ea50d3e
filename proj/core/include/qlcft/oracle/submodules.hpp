#pragma once

#include "qlcft/prime_component.hpp"
#include "qlcft/oracle/finite_group.hpp"

namespace qlcft::oracle {

/// Finite-index submodules of Z_p^rank with index at most p^max_exponent,
/// listed through their canonical bases and checked one-for-one against
/// the brute-force subgroups of (Z/p^max_exponent)^rank of index at most
/// p^max_exponent. Throws OracleMismatch if the two listings disagree and
/// BudgetError if the brute force is too large.
std::vector<PrimeComponent> enumerate_submodules(Prime p, int rank, int max_exponent,
                                                 std::uint64_t budget = default_budget);

} // namespace qlcft::oracle
