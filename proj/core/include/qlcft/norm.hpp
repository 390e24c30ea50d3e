#pragma once

#include "qlcft/extension.hpp"
#include "qlcft/field_spec.hpp"
#include "qlcft/group_shape.hpp"
#include "qlcft/prime_component.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlcft {

/// An element of Nr(E): a finite-index subgroup of
/// E*/D(E) = C2 x prod_{pi1} Z_p x prod_{pi2} Z_p^2
/// that is full on every pi1 factor, has index `two_part` on C2 and equals
/// `component(p)` on each pi2 factor.
///
/// The pi2 factor of E*/D(E) is identified with the pi2 factor of the
/// Galois group in the same coordinates, so the norm group of an extension
/// carries its own pi2 components unchanged.
class NormSubgroup {
public:
  using ComponentMap = std::map<Prime, PrimeComponent>;

  static NormSubgroup full(const FieldSpec& spec);

  /// Missing pi2 primes get the full module. Throws ValidationError for a
  /// two_part outside {1,2}, a prime outside pi2 or a rank other than 2;
  /// LevelError when a component exceeds its level.
  static NormSubgroup make(const FieldSpec& spec, int two_part, ComponentMap components);

  int two_part() const noexcept { return two_part_; }
  const ComponentMap& components() const noexcept { return components_; }
  const PrimeComponent& component(Prime p) const;
  std::int64_t index() const;

  friend bool operator==(const NormSubgroup&, const NormSubgroup&) = default;
  friend bool operator<(const NormSubgroup& l, const NormSubgroup& r);

private:
  NormSubgroup() = default;

  int two_part_ = 1;
  ComponentMap components_;
};

/// A norm subgroup of E1* for E1 = E(sqrt(-1)): pi2 components only (E1 has
/// no 2-part and pi1 factors are norm-invisible).
class NormSubgroupE1 {
public:
  using ComponentMap = std::map<Prime, PrimeComponent>;

  static NormSubgroupE1 full(const FieldSpec& spec);
  static NormSubgroupE1 make(const FieldSpec& spec, ComponentMap components);

  const ComponentMap& components() const noexcept { return components_; }
  const PrimeComponent& component(Prime p) const;
  std::int64_t index() const;

  friend bool operator==(const NormSubgroupE1&, const NormSubgroupE1&) = default;
  friend bool operator<(const NormSubgroupE1& l, const NormSubgroupE1& r) {
    return l.components_ < r.components_;
  }

private:
  NormSubgroupE1() = default;

  ComponentMap components_;
};

/// N(R/E). The pi1 part of R contributes nothing; two_part is 2 iff R is
/// nonreal.
NormSubgroup norm_group(const FieldSpec& spec, const FiniteExtension& ext);

/// i(L/E) = [E* : u].
std::int64_t index(const FieldSpec& spec, const NormSubgroup& u);

/// Invariant factors of E*/u = (prod_{pi2} Z_p^2/u_p) x C_{two_part}.
GroupShape quotient_shape(const FieldSpec& spec, const NormSubgroup& u);

/// Intersection (norm group of the compositum). Throws LevelError.
NormSubgroup meet(const FieldSpec& spec, const NormSubgroup& u, const NormSubgroup& v);

/// Product (norm group of the intersection).
NormSubgroup join(const FieldSpec& spec, const NormSubgroup& u, const NormSubgroup& v);

/// v is a subgroup of u.
bool contains(const NormSubgroup& u, const NormSubgroup& v);

/// The class field of u, unique up to E-isomorphism: NONREAL iff
/// two_part == 2, pi2 components taken from u, pi1 components full.
FiniteExtension class_field_of(const FieldSpec& spec, const NormSubgroup& u);

/// cl(R/E), the class field with the same norm group as R.
FiniteExtension cl_of(const FieldSpec& spec, const FiniteExtension& ext);

/// R n E_Ab, where E_Ab = E(sqrt(-1)) is the maximal abelian extension.
FiniteExtension maximal_abelian_subextension(const FieldSpec& spec, const FiniteExtension& ext);

/// cl(R/E) = R n E_Ab, which holds iff every pi2 component of R is full.
bool class_field_is_abelian_part(const FieldSpec& spec, const FiniteExtension& ext);

struct NormGroupsOfIndex {
  std::vector<NormSubgroup> groups;
  std::optional<std::string> reason; // set iff no subgroup of that index can be a norm group
};

/// All norm subgroups of index exactly n, in ascending canonical order.
/// An index divisible by a pi1 prime or by 4, or needing a level above k_p,
/// yields an empty list and a reason.
NormGroupsOfIndex norm_groups_of_index(const FieldSpec& spec, std::int64_t n);

/// N(R1/E1) for R1 = R(sqrt(-1)).
NormSubgroupE1 norm_group_over_e1(const FieldSpec& spec, const FiniteExtension& ext);

/// H1 -> H1 n E*: copies the pi2 components; two_part is 2 iff `nonreal`.
NormSubgroup restrict_to_base(const FieldSpec& spec, const NormSubgroupE1& u1, bool nonreal);

/// Drops the two_part.
NormSubgroupE1 extend_to_e1(const FieldSpec& spec, const NormSubgroup& u);

/// Invariant factors of E1*/u1.
GroupShape quotient_shape_e1(const FieldSpec& spec, const NormSubgroupE1& u1);

} // namespace qlcft
