#pragma once

#include "qlcft/field_spec.hpp"
#include "qlcft/group_shape.hpp"
#include "qlcft/prime_component.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qlcft {

enum class Reality { Real, Nonreal };

/// An E-isomorphism class of finite extensions of E.
///
/// The Galois group of E is A x| <sigma> with A = prod_p Z_p^{c(p)} and sigma
/// acting by inversion. Every subgroup of A is sigma-stable and normal, and
/// all involutions are conjugate, so an open subgroup is determined up to
/// conjugacy by its intersection H0 with A together with whether it contains
/// an involution. REAL classes are H0 x| <sigma> (odd degree, inside a fixed
/// real closure); NONREAL classes are H0 itself and contain sqrt(-1).
///
/// Components are stored for every prime of pi1 u pi2; the full module
/// means the extension has no p-part.
class FiniteExtension {
public:
  using ComponentMap = std::map<Prime, PrimeComponent>;

  /// E itself.
  static FiniteExtension base(const FieldSpec& spec);

  /// E(sqrt(-1)).
  static FiniteExtension imaginary_base(const FieldSpec& spec);

  /// Validates ranks and level bounds; primes missing from `components`
  /// get the full module.
  static FiniteExtension make(const FieldSpec& spec, Reality reality, ComponentMap components);

  Reality reality() const noexcept { return reality_; }
  bool is_real() const noexcept { return reality_ == Reality::Real; }
  const ComponentMap& components() const noexcept { return components_; }
  const PrimeComponent& component(Prime p) const;

  FiniteExtension with_reality(Reality r) const;

  friend bool operator==(const FiniteExtension&, const FiniteExtension&) = default;
  friend bool operator<(const FiniteExtension& l, const FiniteExtension& r);

private:
  FiniteExtension() = default;
  FiniteExtension(Reality r, ComponentMap c) : reality_(r), components_(std::move(c)) {}

  friend FiniteExtension intersect(const FiniteExtension& x, const FiniteExtension& y);

  Reality reality_ = Reality::Real;
  ComponentMap components_;
};

std::int64_t degree(const FiniteExtension& ext);
bool is_normal(const FiniteExtension& ext);

/// Lattice join of fields: componentwise intersection of subgroups; REAL iff
/// both are REAL. Throws LevelError if a component leaves the level bound.
FiniteExtension compositum(const FieldSpec& spec, const FiniteExtension& x,
                           const FiniteExtension& y);

/// Lattice meet of fields: componentwise sum of subgroups; NONREAL iff both
/// are NONREAL.
FiniteExtension intersect(const FiniteExtension& x, const FiniteExtension& y);

/// Whether x embeds in y over E.
bool embeds(const FiniteExtension& x, const FiniteExtension& y);

FiniteExtension adjoin_i(const FiniteExtension& ext);
FiniteExtension odd_part(const FiniteExtension& ext);

/// Normal closure over E: E stays E, everything else gains sqrt(-1).
FiniteExtension normal_closure(const FiniteExtension& ext);

/// Gal(R(sqrt(-1))/E(sqrt(-1))) as invariant factors. For normal R the full
/// Gal(R/E) is this group extended by C2 acting by inversion, flagged by
/// `inversion_extension`.
struct GaloisStructure {
  GroupShape abelian_part;
  bool inversion_extension = false;
  friend bool operator==(const GaloisStructure&, const GaloisStructure&) = default;
};

GaloisStructure galois_shape(const FiniteExtension& ext);

enum class ExtensionFilter { All, ClassFields };

/// Truncation levels needed to enumerate every class of degree <= max_degree.
/// Only pi2 primes matter for class fields.
LevelMap required_levels(const FieldSpec& spec, std::int64_t max_degree, ExtensionFilter filter);

/// Every class of degree <= max_degree exactly once, ordered by degree and
/// then by canonical data. Throws LevelError naming the first prime whose
/// level is too low.
std::vector<FiniteExtension> enumerate_extensions(const FieldSpec& spec, std::int64_t max_degree,
                                                  ExtensionFilter filter = ExtensionFilter::All);

enum class SigmaClass { Sigma0, Sigma1, Neither };

const char* to_string(SigmaClass s);

/// Sigma0: REAL with every pi1 component full (inside the real closure in
/// Lambda1). Sigma1: the same but NONREAL. These are exactly the class
/// fields.
SigmaClass sigma_class(const FieldSpec& spec, const FiniteExtension& ext);

} // namespace qlcft
