#pragma once

// Element-set realization of the field model at a fixed truncation level.
// Values of the closed-form modules (extensions, norm subgroups) are
// converted to explicit subgroups of (Z/p^L)^{c(p)} by spanning their basis
// vectors; every lattice operation is then recomputed on element sets.

#include "qlcft/extension.hpp"
#include "qlcft/field_spec.hpp"
#include "qlcft/norm.hpp"
#include "qlcft/oracle/finite_group.hpp"

#include <map>

namespace qlcft::oracle {

/// Per-prime factors (Z/p^L)^{c(p)} of both the abelian part A of the
/// Galois group and of E*/D(E).
class TruncatedModel {
public:
  /// `levels` must cover every prime of pi1 u pi2.
  TruncatedModel(const FieldSpec& spec, LevelMap levels);

  const FieldSpec& spec() const noexcept { return spec_; }
  int level(Prime p) const { return levels_.at(p); }
  const LevelMap& levels() const noexcept { return levels_; }
  const FiniteAbelianGroup& factor(Prime p) const { return factors_.at(p); }

  /// Element set of a component; throws LevelError if the truncation would
  /// not be faithful (p^L Z_p^rank not inside the component).
  Subgroup lift(const PrimeComponent& comp) const;

private:
  FieldSpec spec_;
  LevelMap levels_;
  std::map<Prime, FiniteAbelianGroup> factors_;
};

/// An open subgroup of A x| <sigma> that contains sigma (REAL) or lies in A
/// (NONREAL), recorded by its intersection with A.
struct OracleExtension {
  bool real = true;
  std::map<Prime, Subgroup> parts;
};

/// A subgroup of the truncated E*/D(E): C2 part of order 1 or 2 and a
/// subgroup of every odd factor.
struct OracleNorm {
  int c2_order = 2; // |N n C2|: 2 when the whole C2 lies in N
  std::map<Prime, Subgroup> parts;
};

OracleExtension lift(const TruncatedModel& m, const FiniteExtension& ext);
OracleNorm lift(const TruncatedModel& m, const NormSubgroup& u);

std::uint64_t degree(const TruncatedModel& m, const OracleExtension& x);
OracleExtension compositum(const TruncatedModel& m, const OracleExtension& x,
                           const OracleExtension& y);
OracleExtension intersect(const TruncatedModel& m, const OracleExtension& x,
                          const OracleExtension& y);
bool embeds(const OracleExtension& x, const OracleExtension& y);

/// Norm group via the reciprocity map: the preimage of the Galois subgroup
/// under E*/D(E) -> A, which is the coordinate identity on pi2 factors and
/// zero on pi1 factors; the C2 factor survives iff the extension is real.
OracleNorm norm(const TruncatedModel& m, const OracleExtension& x);

std::uint64_t index(const TruncatedModel& m, const OracleNorm& u);
OracleNorm meet(const OracleNorm& u, const OracleNorm& v);
OracleNorm join(const TruncatedModel& m, const OracleNorm& u, const OracleNorm& v);
bool contains(const OracleNorm& u, const OracleNorm& v);
bool same(const OracleNorm& u, const OracleNorm& v);
bool same(const OracleExtension& x, const OracleExtension& y);

/// Invariant factors of E*/N over the truncated model.
GroupShape quotient_shape(const TruncatedModel& m, const OracleNorm& u);

/// Brute-force normality of the open subgroup attached to `x` inside the
/// finite group A_L x| C2, where C2 acts by inversion. Uses the full product
/// of all odd factors, so it is limited by FiniteAbelianGroup::max_order.
bool is_normal_brute_force(const TruncatedModel& m, const OracleExtension& x);

} // namespace qlcft::oracle
