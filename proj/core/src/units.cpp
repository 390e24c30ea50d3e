#include "qlcft/units.hpp"

#include "qlcft/arith.hpp"
#include "qlcft/error.hpp"
#include "qlcft/extension.hpp"

#include <numeric>

namespace qlcft {

namespace {

void require_positive(std::int64_t n) {
  if (n < 1) throw ValidationError("n must be a positive integer, got " + std::to_string(n));
}

std::int64_t prime_part(std::int64_t n, Prime p) {
  std::int64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

} // namespace

AdmissiblePair greatest_admissible_pair(const FieldSpec& spec, std::int64_t n) {
  require_positive(n);
  AdmissiblePair out;
  if (n % 2 == 0) out.n_e = 2;
  for (Prime p : spec.pi1()) out.n_e *= prime_part(n, p);
  for (Prime p : spec.pi2()) {
    const std::int64_t q = prime_part(n, p);
    out.n_e *= q;
    out.n_e1 *= q;
  }
  return out;
}

GroupShape unit_quotient_shape(const FieldSpec& spec, std::int64_t n) {
  const auto [ne, ne1] = greatest_admissible_pair(spec, n);
  return GroupShape::from_cyclic({ne, ne1});
}

GroupShape unit_quotient_shape_e1(const FieldSpec& spec, std::int64_t n) {
  require_positive(n);
  std::vector<std::int64_t> orders;
  for (Prime p : spec.pi1()) orders.push_back(prime_part(n, p));
  for (Prime p : spec.pi2()) {
    orders.push_back(prime_part(n, p));
    orders.push_back(prime_part(n, p));
  }
  return GroupShape::from_cyclic(orders);
}

std::int64_t power_collapse(const FieldSpec& spec, std::int64_t n) {
  return greatest_admissible_pair(spec, n).n_e;
}

bool is_strictly_quasilocal(const FieldSpec& spec) { return spec.pi1().empty(); }

BrauerDescriptor brauer_descriptor(const FieldSpec& spec, const FiniteExtension& ext) {
  if (ext.is_real()) return {BrauerDescriptor::Kind::ExponentAtMostTwo, {}};
  return {BrauerDescriptor::Kind::QuasicyclicSum, spec.pi2()};
}

const char* to_string(ShapeLawViolation v) {
  switch (v) {
  case ShapeLawViolation::None: return "none";
  case ShapeLawViolation::ExponentDoesNotDivideOrder: return "exponent does not divide order";
  case ShapeLawViolation::CofactorHasExcludedPrime: return "n/e divisible by 2 or a pi1 prime";
  case ShapeLawViolation::OrderDoesNotDivideExponentSquared: return "n does not divide e^2";
  case ShapeLawViolation::ExponentNotRealizable: return "e does not divide n(E)";
  }
  return "?";
}

ShapeLawResult finite_index_shape_law(const FieldSpec& spec, std::int64_t n, std::int64_t e) {
  require_positive(n);
  require_positive(e);
  ShapeLawResult r;
  auto fail = [&](ShapeLawViolation v, std::string why) {
    r.violation = v;
    r.reason = std::move(why);
    return r;
  };
  if (n % e != 0)
    return fail(ShapeLawViolation::ExponentDoesNotDivideOrder,
                std::to_string(e) + " does not divide " + std::to_string(n));
  const std::int64_t cofactor = n / e;
  if (cofactor % 2 == 0)
    return fail(ShapeLawViolation::CofactorHasExcludedPrime,
                "n/e = " + std::to_string(cofactor) + " is divisible by 2");
  for (Prime p : spec.pi1())
    if (cofactor % p == 0)
      return fail(ShapeLawViolation::CofactorHasExcludedPrime,
                  "n/e = " + std::to_string(cofactor) + " is divisible by pi1 prime " +
                      std::to_string(p));
  if (e % cofactor != 0) // n | e^2  <=>  n/e | e
    return fail(ShapeLawViolation::OrderDoesNotDivideExponentSquared,
                std::to_string(n) + " does not divide " + std::to_string(e) + "^2");
  const std::int64_t ne = power_collapse(spec, n);
  if (ne % e != 0)
    return fail(ShapeLawViolation::ExponentNotRealizable,
                std::to_string(e) + " does not divide n(E) = " + std::to_string(ne));
  r.shape = GroupShape::from_cyclic({e, cofactor});
  return r;
}

} // namespace qlcft
