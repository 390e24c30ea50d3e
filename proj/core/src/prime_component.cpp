#include "qlcft/prime_component.hpp"

#include "qlcft/arith.hpp"
#include "qlcft/error.hpp"

#include <algorithm>
#include <limits>

namespace qlcft {

namespace {

void check_rank(int rank) {
  if (rank != 1 && rank != 2)
    throw ValidationError("component rank must be 1 or 2, got " + std::to_string(rank));
}

PrimeComponent from_hermite(Prime p, const IntMatrix& h) {
  if (h.size() == 1) return PrimeComponent::cyclic(p, valuation(h[0][0], p));
  return PrimeComponent::planar(p, valuation(h[0][0], p), valuation(h[1][1], p), h[0][1]);
}

} // namespace

PrimeComponent PrimeComponent::full(Prime p, int rank) {
  check_rank(rank);
  return PrimeComponent(p, rank, 0, 0, 0);
}

PrimeComponent PrimeComponent::cyclic(Prime p, int a) {
  if (a < 0) throw ValidationError("negative exponent in rank-1 component", p);
  return PrimeComponent(p, 1, a, 0, 0);
}

PrimeComponent PrimeComponent::planar(Prime p, int a, int b, std::int64_t c) {
  if (a < 0 || b < 0) throw ValidationError("negative exponent in rank-2 component", p);
  const std::int64_t pb = ipow(p, b);
  if (c < 0 || c >= pb)
    throw ValidationError("rank-2 component needs 0 <= c < p^b (c = " + std::to_string(c) +
                              ", p^b = " + std::to_string(pb) + ")",
                          p);
  return PrimeComponent(p, 2, a, b, c);
}

std::int64_t PrimeComponent::index() const { return ipow(p_, a_ + b_); }

IntMatrix PrimeComponent::basis() const {
  if (rank_ == 1) return {{ipow(p_, a_)}};
  return {{ipow(p_, a_), c_}, {0, ipow(p_, b_)}};
}

bool PrimeComponent::contains(std::span<const std::int64_t> v) const {
  if (static_cast<int>(v.size()) != rank_)
    throw ValidationError("vector length does not match component rank", p_);
  const std::int64_t pa = ipow(p_, a_);
  if (v[0] % pa != 0) return false;
  if (rank_ == 1) return true;
  const std::int64_t pb = ipow(p_, b_);
  const std::int64_t s = mod(v[0] / pa, pb);
  const Int128 rem = static_cast<Int128>(v[1]) - static_cast<Int128>(s) * c_;
  return rem % pb == 0;
}

std::string PrimeComponent::to_string() const {
  if (rank_ == 1) return "Z" + std::to_string(p_) + "[exp=" + std::to_string(a_) + "]";
  return "Z" + std::to_string(p_) + "^2[a=" + std::to_string(a_) + ",b=" + std::to_string(b_) +
         ",c=" + std::to_string(c_) + "]";
}

PrimeComponent canonical_component_unbounded(Prime p, int rank,
                                             std::span<const IntRow> generators) {
  check_rank(rank);
  for (const IntRow& g : generators)
    if (static_cast<int>(g.size()) != rank)
      throw ValidationError("generator length does not match rank " + std::to_string(rank), p);

  int v = std::numeric_limits<int>::max();
  if (rank == 1) {
    for (const IntRow& g : generators)
      if (g[0] != 0) v = std::min(v, valuation(g[0], p));
    if (v == std::numeric_limits<int>::max()) throw ZeroModuleError(p);
    return PrimeComponent::cyclic(p, v);
  }

  // The index of the Z_p-span is p^(min valuation of the 2x2 minors).
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      const Int128 det = static_cast<Int128>(generators[i][0]) * generators[j][1] -
                           static_cast<Int128>(generators[i][1]) * generators[j][0];
      if (det != 0) v = std::min(v, valuation128(det, p));
    }
  if (v == std::numeric_limits<int>::max()) throw ZeroModuleError(p);
  // The span contains p^v Z_p^2, so the form modulo p^v is exact.
  const IntMatrix h =
      hermite_form_mod(IntMatrix(generators.begin(), generators.end()), 2, ipow(p, v));
  return from_hermite(p, h);
}

PrimeComponent canonical_component(const FieldSpec& spec, Prime p,
                                   std::span<const IntRow> generators) {
  const int rank = spec.rank(p);
  PrimeComponent x = [&] {
    try {
      return canonical_component_unbounded(p, rank, generators);
    } catch (const std::overflow_error&) {
      throw LevelError(p, spec.level(p), std::numeric_limits<int>::max());
    }
  }();
  if (x.index_exponent() > spec.level(p))
    throw LevelError(p, spec.level(p), x.index_exponent());
  return x;
}

PrimeComponent component_sum(const PrimeComponent& x, const PrimeComponent& y) {
  if (x.prime() != y.prime() || x.rank() != y.rank())
    throw ValidationError("components over different primes or ranks", x.prime());
  if (x.rank() == 1) return PrimeComponent::cyclic(x.prime(), std::min(x.a(), y.a()));
  const int m = std::min(x.index_exponent(), y.index_exponent());
  IntMatrix rows = x.basis();
  for (IntRow& r : y.basis()) rows.push_back(std::move(r));
  return from_hermite(x.prime(), hermite_form_mod(rows, 2, ipow(x.prime(), m)));
}

PrimeComponent component_intersection(const PrimeComponent& x, const PrimeComponent& y,
                                      int level) {
  if (x.prime() != y.prime() || x.rank() != y.rank())
    throw ValidationError("components over different primes or ranks", x.prime());
  const Prime p = x.prime();
  PrimeComponent out = PrimeComponent::full(p, x.rank());
  if (x.rank() == 1) {
    out = PrimeComponent::cyclic(p, std::max(x.a(), y.a()));
  } else {
    // Zassenhaus: rows (u, u) for u in A and (w, 0) for w in B. Rows of the
    // Hermite form that vanish on the first block span A n B in the second.
    // Both modules contain p^m Z_p^2, so the whole row lattice contains
    // p^m Z^4 and the form modulo p^m is exact.
    const int m = std::max(x.index_exponent(), y.index_exponent());
    IntMatrix rows;
    for (const IntRow& u : x.basis()) rows.push_back({u[0], u[1], u[0], u[1]});
    for (const IntRow& w : y.basis()) rows.push_back({w[0], w[1], 0, 0});
    const IntMatrix h = hermite_form_mod(rows, 4, ipow(p, m));
    out = from_hermite(p, {{h[2][2], h[2][3]}, {h[3][2], h[3][3]}});
  }
  if (out.index_exponent() > level) throw LevelError(p, level, out.index_exponent());
  return out;
}

bool component_contains(const PrimeComponent& outer, const PrimeComponent& inner) {
  if (outer.prime() != inner.prime() || outer.rank() != inner.rank())
    throw ValidationError("components over different primes or ranks", outer.prime());
  for (const IntRow& g : inner.basis())
    if (!outer.contains(g)) return false;
  return true;
}

GroupShape component_quotient_shape(const PrimeComponent& x) {
  const Prime p = x.prime();
  if (x.rank() == 1) return GroupShape::from_cyclic({ipow(p, x.a())});
  // Smith form of [[p^a, c], [0, p^b]]: the first elementary divisor is the
  // gcd of the entries, the second is the index divided by it.
  int v = std::min(x.a(), x.b());
  if (x.c() != 0) v = std::min(v, valuation(x.c(), p));
  return GroupShape::from_cyclic({ipow(p, v), ipow(p, x.index_exponent() - v)});
}

std::vector<PrimeComponent> enumerate_components(Prime p, int rank, int max_exponent) {
  check_rank(rank);
  std::vector<PrimeComponent> out;
  for (int n = 0; n <= max_exponent; ++n) {
    if (rank == 1) {
      out.push_back(PrimeComponent::cyclic(p, n));
      continue;
    }
    for (int a = n; a >= 0; --a) {
      const int b = n - a;
      const std::int64_t pb = ipow(p, b);
      for (std::int64_t c = 0; c < pb; ++c) out.push_back(PrimeComponent::planar(p, a, b, c));
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimeComponent& l, const PrimeComponent& r) {
    if (l.index_exponent() != r.index_exponent()) return l.index_exponent() < r.index_exponent();
    return l < r;
  });
  return out;
}

} // namespace qlcft
