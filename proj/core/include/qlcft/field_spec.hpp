#pragma once

#include <cstdint>
#include <map>
#include <set>

namespace qlcft {

using Prime = std::int64_t;
using PrimeSet = std::set<Prime>;
using LevelMap = std::map<Prime, int>;

enum class PrimeClass { Two, Pi1, Pi2, Outside };

const char* to_string(PrimeClass c);

/// Invariant data of a formally real quasilocal field E: the odd primes of
/// cohomological dimension 1 (pi1) and 2 (pi2), plus a truncation level k_p
/// for each of them. The working model of Z_p is Z/p^{k_p}.
///
/// E*/D(E) is modelled as C2 x prod_{pi1} Z_p x prod_{pi2} Z_p^2 and the
/// Galois group as (prod_p Z_p^{c(p)}) x| C2 with C2 acting by inversion.
class FieldSpec {
public:
  /// Largest admissible truncation modulus; keeps every product of two
  /// residues inside int64.
  static constexpr std::int64_t max_modulus = std::int64_t{1} << 31;

  /// Validates and builds a spec. Throws ValidationError naming the
  /// offending prime on overlap, even or composite members, and missing,
  /// extra or nonpositive levels.
  static FieldSpec make(PrimeSet pi1, PrimeSet pi2, LevelMap level);

  const PrimeSet& pi1() const noexcept { return pi1_; }
  const PrimeSet& pi2() const noexcept { return pi2_; }
  const LevelMap& levels() const noexcept { return level_; }

  /// k_p for p in pi1 or pi2; throws ValidationError otherwise.
  int level(Prime p) const;

  /// pi1 and pi2 together, increasing.
  PrimeSet odd_primes() const;

  /// Pi(E) = {2} u pi1 u pi2.
  PrimeSet pi() const;

  /// Throws ValidationError for non-prime p.
  PrimeClass classify(Prime p) const;

  /// c(p) = cd_p of the Galois group of E(sqrt(-1)): 1 on pi1, 2 on pi2.
  int rank(Prime p) const;

  /// Same field data with every level raised to at least `floor`.
  FieldSpec with_min_levels(const LevelMap& floor) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  FieldSpec() = default;

  PrimeSet pi1_;
  PrimeSet pi2_;
  LevelMap level_;
};

/// Free-function form of FieldSpec::classify.
inline PrimeClass classify_prime(const FieldSpec& spec, Prime p) { return spec.classify(p); }

} // namespace qlcft
