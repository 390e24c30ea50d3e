#pragma once

// Closed-form arithmetic of the unit group E* of a formally real quasilocal
// field: power subgroups, their indices and quotient shapes, the strict
// quasilocality test and the Brauer group support.

#include "qlcft/field_spec.hpp"
#include "qlcft/group_shape.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace qlcft {

class FiniteExtension;

/// The pair (n(E), n(E)_1): the greatest integers with
/// n(E)_1 | n(E) | n, 4 does not divide n(E), n(E)_1 is odd, n(E) is only
/// divisible by primes of Pi(E) and n(E)_1 by no prime of pi1.
struct AdmissiblePair {
  std::int64_t n_e = 1;
  std::int64_t n_e1 = 1;
  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// Closed form: n(E) = 2^min(v2(n),1) * prod_{pi1 u pi2} p^vp(n),
/// n(E)_1 = prod_{pi2} p^vp(n). Throws ValidationError for n < 1.
AdmissiblePair greatest_admissible_pair(const FieldSpec& spec, std::int64_t n);

/// Shape of E*/E*^n, i.e. C_{n(E)} x C_{n(E)_1}.
GroupShape unit_quotient_shape(const FieldSpec& spec, std::int64_t n);

/// Shape of E1*/E1*^n for E1 = E(sqrt(-1)): one copy of C_{p^vp(n)} per pi1
/// prime, two per pi2 prime, and no 2-part.
GroupShape unit_quotient_shape_e1(const FieldSpec& spec, std::int64_t n);

/// n(E): the exponent with E*^n = E*^{n(E)}.
std::int64_t power_collapse(const FieldSpec& spec, std::int64_t n);

/// E is strictly quasilocal iff pi1 is empty.
bool is_strictly_quasilocal(const FieldSpec& spec);

struct BrauerDescriptor {
  enum class Kind {
    ExponentAtMostTwo, // formally real extension
    QuasicyclicSum,    // nonreal: direct sum of Z(p^inf) over p in support
  };
  Kind kind = Kind::ExponentAtMostTwo;
  PrimeSet support;
  friend bool operator==(const BrauerDescriptor&, const BrauerDescriptor&) = default;
};

BrauerDescriptor brauer_descriptor(const FieldSpec& spec, const FiniteExtension& ext);

enum class ShapeLawViolation {
  None,
  ExponentDoesNotDivideOrder,
  CofactorHasExcludedPrime, // n/e divisible by 2 or a pi1 prime
  OrderDoesNotDivideExponentSquared,
  ExponentNotRealizable,    // e does not divide n(E)
};

const char* to_string(ShapeLawViolation v);

struct ShapeLawResult {
  std::optional<GroupShape> shape;
  ShapeLawViolation violation = ShapeLawViolation::None;
  std::string reason;
  bool valid() const noexcept { return shape.has_value(); }
};

/// Shape of E*/H for a subgroup H of index n whose quotient has exponent e:
/// C_e x C_{n/e} when the pair is admissible, otherwise the first violated
/// condition.
ShapeLawResult finite_index_shape_law(const FieldSpec& spec, std::int64_t n, std::int64_t e);

} // namespace qlcft
