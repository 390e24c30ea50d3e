#include "qlcft/oracle/submodules.hpp"

#include "qlcft/arith.hpp"
#include "qlcft/error.hpp"

#include <set>

namespace qlcft::oracle {

std::vector<PrimeComponent> enumerate_submodules(Prime p, int rank, int max_exponent,
                                                 std::uint64_t budget) {
  std::vector<PrimeComponent> listed = enumerate_components(p, rank, max_exponent);
  const std::int64_t q = ipow(p, max_exponent);
  const FiniteAbelianGroup g(std::vector<std::int64_t>(static_cast<std::size_t>(rank), q));
  const std::uint64_t bound = static_cast<std::uint64_t>(q);

  // Every submodule of index <= p^e contains p^e Z_p^rank, so reduction mod
  // p^e is a bijection onto subgroups of index <= p^e.
  std::set<ElementSet> brute;
  for (const Subgroup& h : enumerate_subgroups(g, budget))
    if (subgroup_index(g, h) <= bound) brute.insert(h.elements);

  std::set<ElementSet> seen;
  for (const PrimeComponent& c : listed) {
    std::vector<Element> gens;
    for (const IntRow& row : c.basis()) gens.push_back(g.encode(row));
    const Subgroup h = span(g, gens);
    if (subgroup_index(g, h) != static_cast<std::uint64_t>(c.index()))
      throw OracleMismatch("index of " + c.to_string() + " disagrees with its element set");
    if (!brute.count(h.elements))
      throw OracleMismatch(c.to_string() + " has no matching subgroup");
    if (!seen.insert(h.elements).second)
      throw OracleMismatch(c.to_string() + " duplicates another listed submodule");
  }
  if (seen.size() != brute.size())
    throw OracleMismatch("brute force found " + std::to_string(brute.size()) +
                         " subgroups but " + std::to_string(seen.size()) + " were listed");
  return listed;
}

} // namespace qlcft::oracle
