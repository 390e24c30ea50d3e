#include "qlcft/oracle/verify.hpp"

#include "qlcft/arith.hpp"
#include "qlcft/error.hpp"
#include "qlcft/extension.hpp"
#include "qlcft/json_io.hpp"
#include "qlcft/norm.hpp"
#include "qlcft/oracle/finite_group.hpp"
#include "qlcft/oracle/submodules.hpp"
#include "qlcft/oracle/truncated_model.hpp"
#include "qlcft/units.hpp"

#include <array>
#include <chrono>
#include <numeric>
#include <set>

namespace qlcft::oracle {
namespace {

std::string show(const FiniteExtension& x) { return qlcft::to_json(x).dump(); }
std::string show(const NormSubgroup& u) { return qlcft::to_json(u).dump(); }
std::string show(const NormSubgroupE1& u) { return qlcft::to_json(u).dump(); }
std::string show(const GroupShape& s) { return s.to_string(); }
std::string show(const AdmissiblePair& p) { return qlcft::to_json(p).dump(); }
std::string show(bool b) { return b ? "true" : "false"; }
std::string show(std::int64_t v) { return std::to_string(v); }
std::string show(int v) { return std::to_string(v); }

class Sweep {
public:
  explicit Sweep(VerificationReport& r) : r_(r) {}

  void instance() { ++r_.instances; }

  // `describe` is only called on failure.
  template <typename F, typename T>
  void expect(F&& describe, const char* what, const T& expected, const T& actual) {
    if (expected == actual) return;
    fail(describe() + ": " + what, show(expected), show(actual));
  }

  void fail(std::string instance, std::string expected, std::string actual) {
    ++r_.total_violations;
    if (r_.violations.size() < VerificationReport::max_listed)
      r_.violations.push_back({std::move(instance), std::move(expected), std::move(actual)});
  }

  void uses(const LevelMap& levels) {
    for (const auto& [p, k] : levels) r_.working_levels[p] = std::max(r_.working_levels[p], k);
  }

  void universe(std::string text) { r_.universe = std::move(text); }

private:
  VerificationReport& r_;
};

// Levels p^k <= bound for every odd prime, times `factor`, at least 1.
LevelMap degree_levels(const FieldSpec& spec, std::int64_t bound, int factor = 1) {
  LevelMap out;
  for (Prime p : spec.odd_primes()) out[p] = std::max(1, factor * floor_log(p, bound));
  return out;
}

// Both modules contain p^L Z_p^rank for L = max of the index exponents, and
// so do their sum and intersection.
LevelMap pair_levels(const FieldSpec& spec, const FiniteExtension& x, const FiniteExtension& y) {
  LevelMap out;
  for (Prime p : spec.odd_primes())
    out[p] = std::max({1, x.component(p).index_exponent(), y.component(p).index_exponent()});
  return out;
}

// Library spec able to enumerate all classes of degree <= bound.
FieldSpec working_spec(const FieldSpec& spec, std::int64_t bound, ExtensionFilter filter) {
  return spec.with_min_levels(required_levels(spec, bound, filter));
}

FiniteExtension strip_pi1(const FieldSpec& spec, const FiniteExtension& x) {
  auto comps = x.components();
  for (Prime p : spec.pi1()) comps.insert_or_assign(p, PrimeComponent::full(p, 1));
  return FiniteExtension::make(spec, x.reality(), std::move(comps));
}

// Lifts into truncated models, cached by (levels, value).
class OracleContext {
public:
  explicit OracleContext(const FieldSpec& spec) : spec_(spec) {}

  const TruncatedModel& model(const LevelMap& levels) {
    auto it = models_.find(levels);
    if (it == models_.end()) it = models_.emplace(levels, TruncatedModel(spec_, levels)).first;
    return it->second;
  }

  const OracleExtension& ext(const LevelMap& levels, const FiniteExtension& x) {
    auto key = std::make_pair(levels, x);
    auto it = exts_.find(key);
    if (it == exts_.end()) it = exts_.emplace(key, lift(model(levels), x)).first;
    return it->second;
  }

  const OracleNorm& norm_of(const LevelMap& levels, const FiniteExtension& x) {
    auto key = std::make_pair(levels, x);
    auto it = norms_.find(key);
    if (it == norms_.end()) it = norms_.emplace(key, norm(model(levels), ext(levels, x))).first;
    return it->second;
  }

private:
  FieldSpec spec_;
  std::map<LevelMap, TruncatedModel> models_;
  std::map<std::pair<LevelMap, FiniteExtension>, OracleExtension> exts_;
  std::map<std::pair<LevelMap, FiniteExtension>, OracleNorm> norms_;
};

// Truncated E*/D(E) (with the C2 factor) or E1*/D(E1) (without) as a
// single group. Odd primes with level 0 are left out.
struct UnitModel {
  std::vector<std::int64_t> moduli;
  std::map<Prime, std::size_t> offset;
  bool c2 = false;
};

UnitModel unit_model(const FieldSpec& spec, const LevelMap& levels, bool with_c2, bool with_pi1) {
  UnitModel m;
  m.c2 = with_c2;
  if (with_c2) m.moduli.push_back(2);
  for (Prime p : spec.odd_primes()) {
    if (!with_pi1 && spec.pi1().count(p)) continue;
    auto it = levels.find(p);
    if (it == levels.end() || it->second == 0) continue;
    m.offset[p] = m.moduli.size();
    for (int i = 0; i < spec.rank(p); ++i) m.moduli.push_back(ipow(p, it->second));
  }
  return m;
}

Subgroup lift_norm(const FiniteAbelianGroup& g, const UnitModel& m, const FieldSpec& spec,
                   const NormSubgroup& u) {
  std::vector<Element> gens;
  std::vector<std::int64_t> v(m.moduli.size(), 0);
  auto push = [&] {
    gens.push_back(g.encode(v));
    std::fill(v.begin(), v.end(), 0);
  };
  if (m.c2 && u.two_part() == 1) {
    v[0] = 1;
    push();
  }
  for (const auto& [p, off] : m.offset) {
    if (spec.pi1().count(p)) {
      v[off] = 1;
      push();
      continue;
    }
    for (const IntRow& row : u.component(p).basis()) {
      for (std::size_t i = 0; i < row.size(); ++i) v[off + i] = row[i];
      push();
    }
  }
  return span(g, gens);
}

// Divisor search for the greatest pair (a, b) with b | a | n, 4 !| a,
// 2 !| b, primes of a in Pi(E) and no pi1 prime dividing b. Empty if no
// valid pair dominates all others.
std::optional<AdmissiblePair> brute_force_pair(const FieldSpec& spec, std::int64_t n) {
  auto ok_a = [&](std::int64_t a) {
    if (a % 4 == 0) return false;
    for (std::int64_t q : prime_factors(a))
      if (q != 2 && !spec.pi1().count(q) && !spec.pi2().count(q)) return false;
    return true;
  };
  auto ok_b = [&](std::int64_t a, std::int64_t b) {
    if (a % b != 0 || b % 2 == 0) return false;
    for (Prime q : spec.pi1())
      if (b % q == 0) return false;
    return true;
  };
  std::vector<AdmissiblePair> valid;
  for (std::int64_t a : divisors(n))
    if (ok_a(a))
      for (std::int64_t b : divisors(a))
        if (ok_b(a, b)) valid.push_back({a, b});
  AdmissiblePair best;
  for (const auto& v : valid)
    if (v.n_e > best.n_e || (v.n_e == best.n_e && v.n_e1 > best.n_e1)) best = v;
  for (const auto& v : valid)
    if (v.n_e > best.n_e || v.n_e1 > best.n_e1) return std::nullopt;
  return best;
}

bool pi1_free(const FieldSpec& spec, std::int64_t n) {
  for (Prime q : spec.pi1())
    if (n % q == 0) return false;
  return true;
}

std::string label(const char* what, std::int64_t v) { return std::string(what) + " " + std::to_string(v); }

void embedding_criterion(const FieldSpec& spec, const VerifyBounds& b, Sweep& s) {
  s.universe("indices 1.." + std::to_string(b.max_degree) + "; extensions of degree <= " +
             std::to_string(b.max_degree) + " against norm subgroups of index <= " +
             std::to_string(b.pair_degree));
  const FieldSpec lib = working_spec(spec, b.max_degree, ExtensionFilter::All);
  s.uses(lib.levels());
  const auto exts = enumerate_extensions(lib, b.max_degree);

  for (std::int64_t n = 1; n <= b.max_degree; ++n) {
    s.instance();
    bool admissible = n % 4 != 0;
    for (std::int64_t q : prime_factors(n))
      if (q != 2 && !spec.pi2().count(q)) admissible = false;
    const auto groups = norm_groups_of_index(lib, n);
    s.expect([&] { return label("index", n); }, "norm subgroups of this index exist", admissible,
             !groups.groups.empty());
    for (const auto& g : groups.groups)
      s.expect([&] { return show(g); }, "index", n, index(lib, g));
  }
  for (const auto& x : exts) {
    s.instance();
    const std::int64_t i = index(lib, norm_group(lib, x));
    s.expect([&] { return show(x); }, "norm index free of pi1 primes", true, pi1_free(spec, i));
  }

  std::vector<NormSubgroup> us;
  for (std::int64_t n = 1; n <= b.pair_degree; ++n)
    for (auto& g : norm_groups_of_index(lib, n).groups) us.push_back(std::move(g));
  OracleContext ctx(spec);
  const LevelMap levels = degree_levels(spec, b.max_degree);
  const TruncatedModel& tm = ctx.model(levels);
  for (const auto& u : us) {
    const FiniteExtension cf = class_field_of(lib, u);
    const OracleExtension& ocf = ctx.ext(levels, cf);
    const OracleNorm ou = lift(tm, u);
    for (const auto& psi : exts) {
      s.instance();
      const std::array<bool, 4> sides{
          qlcft::embeds(cf, psi), qlcft::contains(u, norm_group(lib, psi)),
          oracle::embeds(ocf, ctx.ext(levels, psi)), oracle::contains(ou, ctx.norm_of(levels, psi))};
      if (!(sides[0] == sides[1] && sides[1] == sides[2] && sides[2] == sides[3]))
        s.fail("u=" + show(u) + " psi=" + show(psi), "embeds <=> contains, library and oracle agree",
               std::string("library embeds=") + show(sides[0]) + " contains=" + show(sides[1]) +
                   ", oracle embeds=" + show(sides[2]) + " contains=" + show(sides[3]));
    }
  }
}

void norm_correspondence(const FieldSpec& spec, const VerifyBounds& b, Sweep& s) {
  s.universe("class fields among extensions of degree <= " + std::to_string(b.max_degree) +
             " against oracle norm subgroups of index <= " + std::to_string(b.max_degree) +
             "; unordered pairs of class fields of degree <= " + std::to_string(b.pair_degree));
  const FieldSpec lib = working_spec(spec, b.max_degree, ExtensionFilter::All);
  s.uses(lib.levels());
  std::map<NormSubgroup, FiniteExtension> image;
  for (const auto& x : enumerate_extensions(lib, b.max_degree)) {
    if (sigma_class(lib, x) == SigmaClass::Neither) continue;
    s.instance();
    const NormSubgroup ng = norm_group(lib, x);
    s.expect([&] { return show(x); }, "index equals degree", degree(x), index(lib, ng));
    auto [it, fresh] = image.emplace(ng, x);
    if (!fresh) s.fail(show(it->second) + " and " + show(x), "distinct norm groups", "both " + show(ng));
  }

  LevelMap nl;
  for (Prime p : spec.pi2()) nl[p] = floor_log(p, b.max_degree);
  const UnitModel m = unit_model(spec, nl, true, false);
  const FiniteAbelianGroup g(m.moduli);
  std::set<ElementSet> brute;
  for (const Subgroup& h : enumerate_subgroups(g, b.budget))
    if (subgroup_index(g, h) <= static_cast<std::uint64_t>(b.max_degree)) brute.insert(h.elements);
  std::set<ElementSet> hit;
  for (const auto& [u, x] : image) {
    s.instance();
    const Subgroup h = lift_norm(g, m, spec, u);
    if (!brute.count(h.elements))
      s.fail("norm group of " + show(x), "an oracle subgroup of index <= " + std::to_string(b.max_degree),
             "none");
    hit.insert(h.elements);
  }
  s.instance();
  s.expect([] { return std::string("class-field image"); }, "number of oracle norm subgroups",
           static_cast<std::int64_t>(brute.size()), static_cast<std::int64_t>(hit.size()));

  const auto cfs = enumerate_extensions(working_spec(spec, b.pair_degree, ExtensionFilter::ClassFields),
                                        b.pair_degree, ExtensionFilter::ClassFields);
  const FieldSpec plib = spec.with_min_levels(degree_levels(spec, b.pair_degree, 2));
  s.uses(plib.levels());
  OracleContext ctx(spec);
  for (std::size_t i = 0; i < cfs.size(); ++i) {
    for (std::size_t j = i; j < cfs.size(); ++j) {
      s.instance();
      const FiniteExtension& x = cfs[i];
      const FiniteExtension& y = cfs[j];
      auto who = [&] { return show(x) + " , " + show(y); };
      const FiniteExtension c = compositum(plib, x, y);
      const FiniteExtension t = qlcft::intersect(x, y);
      const NormSubgroup nx = norm_group(plib, x), ny = norm_group(plib, y);
      const NormSubgroup mt = qlcft::meet(plib, nx, ny), jn = qlcft::join(plib, nx, ny);
      s.expect(who, "norm group of compositum is the meet", mt, norm_group(plib, c));
      s.expect(who, "norm group of intersection is the join", jn, norm_group(plib, t));

      const LevelMap levels = pair_levels(spec, x, y);
      const TruncatedModel& tm = ctx.model(levels);
      const OracleExtension& ox = ctx.ext(levels, x);
      const OracleExtension& oy = ctx.ext(levels, y);
      const OracleExtension oc = oracle::compositum(tm, ox, oy);
      const OracleExtension ot = oracle::intersect(tm, ox, oy);
      const OracleNorm nc = oracle::norm(tm, oc), nt = oracle::norm(tm, ot);
      const OracleNorm& onx = ctx.norm_of(levels, x);
      const OracleNorm& ony = ctx.norm_of(levels, y);
      s.expect(who, "oracle compositum matches", true, same(oc, lift(tm, c)));
      s.expect(who, "oracle intersection matches", true, same(ot, lift(tm, t)));
      s.expect(who, "oracle norm of compositum is the oracle meet", true,
               same(nc, oracle::meet(onx, ony)) && same(nc, lift(tm, mt)));
      s.expect(who, "oracle norm of intersection is the oracle join", true,
               same(nt, oracle::join(tm, onx, ony)) && same(nt, lift(tm, jn)));
    }
  }
}

void power_quotients(const FieldSpec& spec, const VerifyBounds& b, Sweep& s) {
  s.universe("every n dividing " + std::to_string(b.n_base));
  for (std::int64_t n : divisors(b.n_base)) {
    s.instance();
    auto who = [&] { return label("n", n); };
    LevelMap levels;
    for (Prime p : spec.odd_primes()) levels[p] = std::max(1, valuation(n, p));
    s.uses(levels);
    const UnitModel m = unit_model(spec, levels, true, true);
    const FiniteAbelianGroup g(m.moduli);
    const Subgroup nb = multiples(g, n);
    const AdmissiblePair pair = greatest_admissible_pair(spec, n);
    const GroupShape shape = unit_quotient_shape(spec, n);
    s.expect(who, "shape against oracle quotient", quotient_shape(g, nb), shape);
    s.expect(who, "shape against C_nE x C_nE1", GroupShape::from_cyclic({pair.n_e, pair.n_e1}), shape);
    const auto brute = brute_force_pair(spec, n);
    if (!brute)
      s.fail(who(), "a greatest admissible pair", "no pair dominates the others");
    else
      s.expect(who, "greatest admissible pair", *brute, pair);
    s.expect(who, "E*^n = E*^n(E)", true, nb.elements == multiples(g, pair.n_e).elements);
    s.expect(who, "index of E*^n", pair.n_e * pair.n_e1, static_cast<std::int64_t>(subgroup_index(g, nb)));
  }
}

void sigma1_normality(const FieldSpec& spec, const VerifyBounds& b, Sweep& s) {
  s.universe("extensions of degree 2.." + std::to_string(b.max_degree));
  const FieldSpec lib = working_spec(spec, b.max_degree, ExtensionFilter::All);
  s.uses(lib.levels());
  OracleContext ctx(spec);
  const LevelMap levels = degree_levels(spec, b.max_degree);
  const TruncatedModel& tm = ctx.model(levels);
  const OracleExtension& imag = ctx.ext(levels, FiniteExtension::imaginary_base(lib));
  for (const auto& x : enumerate_extensions(lib, b.max_degree)) {
    if (degree(x) == 1) continue;
    s.instance();
    auto who = [&] { return show(x); };
    const OracleExtension& ox = ctx.ext(levels, x);
    bool in_lambda1 = true;
    for (Prime p : spec.pi1())
      if (ox.parts.at(p).order() != tm.factor(p).order()) in_lambda1 = false;
    const bool galois = is_normal_brute_force(tm, ox);
    const bool sigma1 = sigma_class(lib, x) == SigmaClass::Sigma1;
    s.expect(who, "Sigma1 <=> Galois inside Lambda1", galois && in_lambda1, sigma1);
    if (sigma1) s.expect(who, "contains sqrt(-1)", true, oracle::embeds(imag, ox));
  }
}

void coprime_pairs(const FieldSpec& spec, const VerifyBounds& b, Sweep& s) {
  s.universe("unordered pairs of coprime degree among extensions of degree <= " +
             std::to_string(b.pair_degree));
  const FieldSpec lib = working_spec(spec, b.pair_degree, ExtensionFilter::All);
  s.uses(lib.levels());
  const auto exts = enumerate_extensions(lib, b.pair_degree);
  OracleContext ctx(spec);
  const LevelMap levels = degree_levels(spec, b.pair_degree);
  const TruncatedModel& tm = ctx.model(levels);
  for (std::size_t i = 0; i < exts.size(); ++i) {
    for (std::size_t j = i; j < exts.size(); ++j) {
      const FiniteExtension& x = exts[i];
      const FiniteExtension& y = exts[j];
      if (std::gcd(degree(x), degree(y)) != 1) continue;
      s.instance();
      auto who = [&] { return show(x) + " , " + show(y); };
      const FiniteExtension c = compositum(lib, x, y);
      const NormSubgroup nx = norm_group(lib, x), ny = norm_group(lib, y), nc = norm_group(lib, c);
      s.expect(who, "degree of compositum", degree(x) * degree(y), degree(c));
      s.expect(who, "norm group of compositum", qlcft::meet(lib, nx, ny), nc);
      s.expect(who, "quotient shape", direct_product(quotient_shape(lib, nx), quotient_shape(lib, ny)),
               quotient_shape(lib, nc));
      const OracleExtension oc = oracle::compositum(tm, ctx.ext(levels, x), ctx.ext(levels, y));
      const OracleNorm onc = oracle::norm(tm, oc);
      s.expect(who, "oracle compositum", true, same(oc, lift(tm, c)));
      s.expect(who, "oracle norm group of compositum", true,
               same(onc, oracle::meet(ctx.norm_of(levels, x), ctx.norm_of(levels, y))));
      s.expect(who, "oracle quotient shape",
               direct_product(oracle::quotient_shape(tm, ctx.norm_of(levels, x)),
                              oracle::quotient_shape(tm, ctx.norm_of(levels, y))),
               oracle::quotient_shape(tm, onc));
    }
  }
}

void primary_decomposition(const FieldSpec& spec, const VerifyBounds& b, Sweep& s) {
  s.universe("nonreal extensions of degree <= " + std::to_string(b.max_degree) +
             " against their primary parts");
  const FieldSpec lib = working_spec(spec, b.max_degree, ExtensionFilter::All);
  s.uses(lib.levels());
  OracleContext ctx(spec);
  const LevelMap levels = degree_levels(spec, b.max_degree);
  for (const auto& x : enumerate_extensions(lib, b.max_degree)) {
    if (x.is_real()) continue;
    s.instance();
    auto who = [&] { return show(x); };
    std::vector<FiniteExtension> parts{FiniteExtension::imaginary_base(lib)};
    for (const auto& [p, comp] : x.components())
      if (!comp.is_full()) parts.push_back(FiniteExtension::make(lib, Reality::Real, {{p, comp}}));
    NormSubgroup meet_all = NormSubgroup::full(lib);
    GroupShape shape;
    std::int64_t deg = 1;
    OracleNorm omeet = ctx.norm_of(levels, FiniteExtension::base(lib));
    for (const auto& part : parts) {
      const NormSubgroup np = norm_group(lib, part);
      meet_all = qlcft::meet(lib, meet_all, np);
      shape = direct_product(shape, quotient_shape(lib, np));
      deg *= degree(part);
      omeet = oracle::meet(omeet, ctx.norm_of(levels, part));
    }
    const NormSubgroup nx = norm_group(lib, x);
    s.expect(who, "degree is the product over primary parts", deg, degree(x));
    s.expect(who, "norm group is the meet over primary parts", meet_all, nx);
    s.expect(who, "quotient shape is the product over primary parts", shape, quotient_shape(lib, nx));
    s.expect(who, "oracle meet over primary parts", true, same(omeet, ctx.norm_of(levels, x)));
  }
}

void odd_power_restriction(const FieldSpec& spec, const VerifyBounds& b, Sweep& s) {
  s.universe("every n dividing " + std::to_string(b.n_base) + "; E and E(sqrt(-1)) power quotients");
  for (std::int64_t n : divisors(b.n_base)) {
    s.instance();
    auto who = [&] { return label("n", n); };
    LevelMap levels;
    for (Prime p : spec.odd_primes()) levels[p] = std::max(1, valuation(n, p));
    s.uses(levels);
    const UnitModel me = unit_model(spec, levels, true, true);
    const UnitModel m1 = unit_model(spec, levels, false, true);
    const FiniteAbelianGroup ge(me.moduli), g1(m1.moduli);
    const Subgroup ne = multiples(ge, n), n1 = multiples(g1, n);
    const GroupShape se = quotient_shape(ge, ne), s1 = quotient_shape(g1, n1);
    s.expect(who, "E quotient", se, unit_quotient_shape(spec, n));
    s.expect(who, "E(sqrt(-1)) quotient", s1, unit_quotient_shape_e1(spec, n));
    if (n % 2 == 0) continue;
    // x -> x with the C2 coordinate dropped; -1 becomes a square upstairs.
    auto restrict = [&](Element x) {
      auto v = ge.decode(x);
      v.erase(v.begin());
      return g1.encode(v);
    };
    const Subgroup kernel = preimage(ge, n1, restrict);
    s.expect(who, "E*/E*^n -> E1*/E1*^n is injective", true, kernel.elements == ne.elements);
    s.expect(who, "E1* = E* E1*^n", static_cast<std::int64_t>(subgroup_index(g1, n1)),
             static_cast<std::int64_t>(subgroup_index(ge, kernel)));
  }
}

void small_power_shapes(const FieldSpec& spec, const VerifyBounds&, Sweep& s) {
  s.universe("p^k for p = 2 (k <= 2) and p in pi1 u pi2 (k <= level)");
  std::vector<std::pair<Prime, int>> cases{{2, 1}, {2, 2}};
  for (Prime p : spec.odd_primes())
    for (int k = 1; k <= spec.level(p); ++k) cases.emplace_back(p, k);
  for (const auto& [p, k] : cases) {
    s.instance();
    const std::int64_t n = ipow(p, k);
    auto who = [&] { return label("n", n); };
    const int copies = p == 2 ? 1 : spec.rank(p);
    const GroupShape expected =
        GroupShape::from_cyclic(std::vector<std::int64_t>(static_cast<std::size_t>(copies), p == 2 ? 2 : n));
    s.expect(who, "unit quotient shape", expected, unit_quotient_shape(spec, n));
    LevelMap levels;
    for (Prime q : spec.odd_primes()) levels[q] = q == p ? k : 1;
    s.uses(levels);
    const UnitModel m = unit_model(spec, levels, true, true);
    const FiniteAbelianGroup g(m.moduli);
    s.expect(who, "oracle quotient", expected, quotient_shape(g, multiples(g, n)));
  }
}

void norm_limitation(const FieldSpec& spec, const VerifyBounds& b, Sweep& s) {
  s.universe("extensions of degree <= " + std::to_string(b.max_degree));
  const FieldSpec lib = working_spec(spec, b.max_degree, ExtensionFilter::All);
  s.uses(lib.levels());
  OracleContext ctx(spec);
  const LevelMap levels = degree_levels(spec, b.max_degree);
  const TruncatedModel& tm = ctx.model(levels);
  for (const auto& x : enumerate_extensions(lib, b.max_degree)) {
    s.instance();
    auto who = [&] { return show(x); };
    const OracleExtension& ox = ctx.ext(levels, x);
    s.expect(who, "normality", is_normal_brute_force(tm, ox), is_normal(x));
    s.expect(who, "degree", static_cast<std::int64_t>(oracle::degree(tm, ox)), degree(x));
    const NormSubgroup ng = norm_group(lib, x);
    s.expect(who, "norm group ignores pi1 components", norm_group(lib, strip_pi1(lib, x)), ng);
    const std::int64_t idx = index(lib, ng), deg = degree(x);
    s.expect(who, "index divides degree", true, deg % idx == 0);
    s.expect(who, "index equals degree exactly on class fields",
             sigma_class(lib, x) != SigmaClass::Neither, idx == deg);
    const OracleNorm& on = ctx.norm_of(levels, x);
    s.expect(who, "oracle norm group", true, same(on, lift(tm, ng)));
    s.expect(who, "oracle index", static_cast<std::int64_t>(oracle::index(tm, on)), idx);
    s.expect(who, "oracle quotient shape", oracle::quotient_shape(tm, on), quotient_shape(lib, ng));
  }
}

void two_level_correspondence(const FieldSpec& spec, const VerifyBounds& b, Sweep& s) {
  s.universe("E1-level norm subgroups of index <= " + std::to_string(b.e1_index) +
             ", both reality flags; E-level norm subgroups of the matching index");
  LevelMap levels;
  for (Prime p : spec.odd_primes())
    levels[p] = spec.pi2().count(p) ? std::max(1, floor_log(p, b.e1_index)) : 1;
  const FieldSpec lib = spec.with_min_levels(levels);
  s.uses(lib.levels());

  std::vector<std::pair<NormSubgroupE1::ComponentMap, std::int64_t>> combos{{{}, 1}};
  for (Prime p : spec.pi2()) {
    std::vector<std::pair<NormSubgroupE1::ComponentMap, std::int64_t>> next;
    const auto subs = enumerate_submodules(p, 2, floor_log(p, b.e1_index), b.budget);
    for (const auto& [comps, idx] : combos)
      for (const auto& sub : subs) {
        if (idx * sub.index() > b.e1_index) continue;
        auto c = comps;
        c.emplace(p, sub);
        next.emplace_back(std::move(c), idx * sub.index());
      }
    combos = std::move(next);
  }

  OracleContext ctx(spec);
  const TruncatedModel& tm = ctx.model(levels);
  for (bool nonreal : {false, true}) {
    const int delta = nonreal ? 2 : 1;
    std::set<NormSubgroup> seen;
    for (const auto& [comps, idx] : combos) {
      s.instance();
      const NormSubgroupE1 u1 = NormSubgroupE1::make(lib, comps);
      auto who = [&] { return show(u1) + (nonreal ? " nonreal" : " real"); };
      const NormSubgroup u = restrict_to_base(lib, u1, nonreal);
      s.expect(who, "extend after restrict", u1, extend_to_e1(lib, u));
      s.expect(who, "two_part", delta, u.two_part());
      s.expect(who, "index", idx * delta, index(lib, u));
      if (!nonreal) s.expect(who, "quotient shapes agree", quotient_shape_e1(lib, u1), quotient_shape(lib, u));
      if (!seen.insert(u).second) s.fail(who(), "injective restriction", "repeated " + show(u));

      // E* n N(R1/E1): preimage under E*/D -> E1*/D, which kills C2;
      // the nonreal flag further meets with N(E1/E), whose C2 part is trivial.
      OracleNorm pre;
      pre.c2_order = nonreal ? 1 : 2;
      GroupShape e1_shape;
      for (Prime p : spec.odd_primes()) {
        Subgroup part = spec.pi1().count(p) ? whole(tm.factor(p)) : tm.lift(u1.component(p));
        e1_shape = direct_product(e1_shape, oracle::quotient_shape(tm.factor(p), part));
        pre.parts.emplace(p, std::move(part));
      }
      s.expect(who, "oracle restriction", true, same(pre, lift(tm, u)));
      if (!nonreal) s.expect(who, "oracle quotient shapes agree", e1_shape, oracle::quotient_shape(tm, pre));
    }
    for (std::int64_t n = 1; n <= b.e1_index * delta; ++n)
      for (const auto& g : norm_groups_of_index(lib, n).groups) {
        if (g.two_part() != delta) continue;
        s.instance();
        s.expect([&] { return show(g); }, "reached by restriction", true, seen.count(g) > 0);
      }
  }
}

void finite_index_shapes(const FieldSpec& spec, const VerifyBounds& b, Sweep& s) {
  const std::int64_t m = b.shape_law_base;
  s.universe("all subgroups of the truncated E*/E*^" + std::to_string(m) +
             "; all (n, e) with e | n | " + std::to_string(m));
  LevelMap levels;
  for (Prime p : spec.odd_primes()) levels[p] = valuation(m, p);
  s.uses(levels);
  const UnitModel um = unit_model(spec, levels, m % 2 == 0, true);
  const FiniteAbelianGroup g(um.moduli);
  std::set<std::pair<std::int64_t, std::int64_t>> realized;
  for (const Subgroup& h : enumerate_subgroups(g, b.budget)) {
    s.instance();
    const GroupShape shape = quotient_shape(g, h);
    const std::int64_t n = shape.order(), e = shape.exponent();
    auto who = [&] { return "subgroup of index " + std::to_string(n) + " with quotient " + show(shape); };
    s.expect(who, "at most two invariant factors", true, shape.rank() <= 2);
    const std::int64_t co = n / e;
    s.expect(who, "n | e^2, n/e prime to 2 and pi1", true,
             (e * e) % n == 0 && co % 2 != 0 && pi1_free(spec, co));
    const ShapeLawResult law = finite_index_shape_law(spec, n, e);
    s.expect(who, "shape law accepts", true, law.valid());
    if (law.valid()) s.expect(who, "shape law shape", shape, *law.shape);
    realized.emplace(n, e);
  }
  for (std::int64_t n : divisors(m))
    for (std::int64_t e : divisors(n)) {
      s.instance();
      s.expect([&] { return "n=" + std::to_string(n) + " e=" + std::to_string(e); },
               "shape law valid <=> realized", realized.count({n, e}) > 0,
               finite_index_shape_law(spec, n, e).valid());
    }
}

void check_bounds(const VerifyBounds& b) {
  auto positive = [](std::int64_t v, const char* name) {
    if (v < 1) throw ValidationError(std::string(name) + " must be positive");
  };
  positive(b.max_degree, "max_degree");
  positive(b.pair_degree, "pair_degree");
  positive(b.n_base, "n_base");
  positive(b.shape_law_base, "shape_law_base");
  positive(b.e1_index, "e1_index");
}

constexpr std::array<std::pair<TheoremId, const char*>, 11> names{{
    {TheoremId::THM_1_1, "THM_1_1"},
    {TheoremId::THM_1_2_I, "THM_1_2_I"},
    {TheoremId::THM_1_2_II, "THM_1_2_II"},
    {TheoremId::THM_1_2_III, "THM_1_2_III"},
    {TheoremId::LEMMA_2_1, "LEMMA_2_1"},
    {TheoremId::LEMMA_2_2, "LEMMA_2_2"},
    {TheoremId::LEMMA_2_4_II, "LEMMA_2_4_II"},
    {TheoremId::LEMMA_2_4_III, "LEMMA_2_4_III"},
    {TheoremId::PROP_3_1, "PROP_3_1"},
    {TheoremId::STMT_3_1, "STMT_3_1"},
    {TheoremId::REMARK_3_2_I, "REMARK_3_2_I"},
}};

} // namespace

const char* to_string(TheoremId id) {
  for (const auto& [k, name] : names)
    if (k == id) return name;
  return "?";
}

std::optional<TheoremId> theorem_from_string(const std::string& name) {
  for (const auto& [k, n] : names)
    if (name == n) return k;
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& [k, name] : names) out.push_back(k);
    return out;
  }();
  return ids;
}

VerificationReport verify(const FieldSpec& spec, TheoremId id, const VerifyBounds& bounds) {
  check_bounds(bounds);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.theorem = id;
  Sweep s(r);
  switch (id) {
  case TheoremId::THM_1_1: embedding_criterion(spec, bounds, s); break;
  case TheoremId::THM_1_2_I: norm_correspondence(spec, bounds, s); break;
  case TheoremId::THM_1_2_II: power_quotients(spec, bounds, s); break;
  case TheoremId::THM_1_2_III: sigma1_normality(spec, bounds, s); break;
  case TheoremId::LEMMA_2_1: coprime_pairs(spec, bounds, s); break;
  case TheoremId::LEMMA_2_2: primary_decomposition(spec, bounds, s); break;
  case TheoremId::LEMMA_2_4_II: odd_power_restriction(spec, bounds, s); break;
  case TheoremId::LEMMA_2_4_III: small_power_shapes(spec, bounds, s); break;
  case TheoremId::PROP_3_1: norm_limitation(spec, bounds, s); break;
  case TheoremId::STMT_3_1: two_level_correspondence(spec, bounds, s); break;
  case TheoremId::REMARK_3_2_I: finite_index_shapes(spec, bounds, s); break;
  }
  r.pass = r.total_violations == 0;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<VerificationReport> verify_all(const FieldSpec& spec, const VerifyBounds& bounds) {
  std::vector<VerificationReport> out;
  for (TheoremId id : all_theorems()) out.push_back(verify(spec, id, bounds));
  return out;
}

nlohmann::json to_json(const VerificationReport& r, bool timing) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"instance", v.instance}, {"expected", v.expected}, {"actual", v.actual}});
  nlohmann::json levels = nlohmann::json::object();
  for (const auto& [p, k] : r.working_levels) levels[std::to_string(p)] = k;
  return {{"theorem", to_string(r.theorem)},
          {"pass", r.pass},
          {"instances", r.instances},
          {"violations", violations},
          {"total_violations", r.total_violations},
          {"universe", r.universe},
          {"working_levels", levels},
          {"elapsed_ms", timing ? static_cast<std::int64_t>(r.elapsed_ms) : 0}};
}

} // namespace qlcft::oracle
