// One line per acceptance criterion on the reference field
// pi1 = {3}, pi2 = {5}, levels {3:2, 5:2}. Exit status is nonzero if any
// criterion fails.

#include "qlcft/norm.hpp"
#include "qlcft/oracle/finite_group.hpp"
#include "qlcft/oracle/submodules.hpp"
#include "qlcft/oracle/verify.hpp"
#include "qlcft/units.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace qlcft;
using namespace qlcft::oracle;

namespace {

constexpr double kBijectionSeconds = 10.0;
constexpr double kSuiteSeconds = 60.0;
constexpr int kPresentations = 1000;
constexpr std::uint64_t kSeed = 20261016;

const FieldSpec& S() {
  static const FieldSpec s = FieldSpec::make({3}, {5}, {{3, 2}, {5, 2}});
  return s;
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [" << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void require_report(Outcome& o, const VerificationReport& r) {
  o.note << ' ' << to_string(r.theorem) << ": " << r.instances << " instances, " << r.total_violations
         << " violations;";
  o.require(r.pass && r.total_violations == 0, std::string(to_string(r.theorem)) + " failed");
}

void bijection(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  require_report(o, verify(S(), TheoremId::THM_1_2_I));
  const double secs = seconds_since(t0);
  int real5 = 0, nonreal10 = 0;
  for (const auto& x : enumerate_extensions(S(), 10, ExtensionFilter::ClassFields)) {
    if (x.is_real() && degree(x) == 5) ++real5;
    if (!x.is_real() && degree(x) == 10) ++nonreal10;
  }
  o.note << " class fields: " << real5 << " real of degree 5, " << nonreal10 << " nonreal of degree 10;"
         << " " << secs << " s";
  o.require(real5 == 6 && nonreal10 == 6, "expected 6 and 6");
  o.require(secs < kBijectionSeconds, "too slow");
}

void duality(Outcome& o) {
  // the pair sweep of the bijection verifier covers compositum/meet and
  // intersection/join on class fields of degree <= 50
  VerifyBounds b;
  b.pair_degree = 50;
  require_report(o, verify(S(), TheoremId::THM_1_2_I, b));
  const FieldSpec big = S().with_min_levels({{5, 4}});
  const auto cf = enumerate_extensions(S(), 50, ExtensionFilter::ClassFields);
  std::uint64_t pairs = 0, bad = 0;
  for (const auto& x : cf)
    for (const auto& y : cf) {
      ++pairs;
      const auto ux = norm_group(big, x), uy = norm_group(big, y);
      if (norm_group(big, compositum(big, x, y)) != meet(big, ux, uy)) ++bad;
      if (norm_group(big, intersect(x, y)) != join(big, ux, uy)) ++bad;
    }
  o.note << " direct pairs: " << pairs << ", violations " << bad;
  o.require(bad == 0, "duality violated");
}

void embedding(Outcome& o) {
  VerifyBounds b;
  b.max_degree = 100;
  b.pair_degree = 50;
  require_report(o, verify(S(), TheoremId::THM_1_1, b));
}

void power_quotients(Outcome& o) {
  VerifyBounds b;
  b.n_base = 900;
  require_report(o, verify(S(), TheoremId::THM_1_2_II, b));
  o.require(unit_quotient_shape(S(), 5) == GroupShape({5, 5}), "n=5");
  o.require(unit_quotient_shape(S(), 3) == GroupShape({3}), "n=3");
  o.require(unit_quotient_shape(S(), 2) == GroupShape({2}), "n=2");
}

void norm_limitation(Outcome& o) { require_report(o, verify(S(), TheoremId::PROP_3_1)); }

void primary_decomposition(Outcome& o) {
  require_report(o, verify(S(), TheoremId::LEMMA_2_1));
  require_report(o, verify(S(), TheoremId::LEMMA_2_2));
}

void two_level(Outcome& o) {
  VerifyBounds b;
  b.e1_index = 25;
  require_report(o, verify(S(), TheoremId::STMT_3_1, b));
}

void shape_law(Outcome& o) {
  VerifyBounds b;
  b.shape_law_base = 450;
  require_report(o, verify(S(), TheoremId::REMARK_3_2_I, b));
}

void canonicity(Outcome& o) {
  const auto subs = enumerate_submodules(5, 2, 2);
  o.note << " submodules of index <= 25: " << subs.size() << ';';
  o.require(subs.size() == 38, "expected 38");

  // random presentations, checked against the span in (Z/125)^2
  const FiniteAbelianGroup g({125, 125});
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
  int bad = 0;
  for (int trial = 0; trial < kPresentations; ++trial) {
    const PrimeComponent& target = subs[static_cast<std::size_t>(trial) % subs.size()];
    IntMatrix gens = target.basis();
    for (int step = 0; step < 8; ++step) {
      const std::size_t i = rng() % 2, j = 1 - i;
      const std::int64_t k = coeff(rng);
      for (std::size_t c = 0; c < 2; ++c) gens[i][c] += k * gens[j][c];
      if (rng() % 2) std::swap(gens[0], gens[1]);
    }
    IntRow extra{0, 0};
    for (const IntRow& row : gens)
      for (std::int64_t k = coeff(rng), c = 0; c < 2; ++c) extra[static_cast<std::size_t>(c)] += k * row[static_cast<std::size_t>(c)];
    gens.push_back(extra);
    std::shuffle(gens.begin(), gens.end(), rng);

    const PrimeComponent got = canonical_component(S(), 5, gens);
    std::vector<Element> lifted, reference;
    for (const IntRow& row : gens) lifted.push_back(g.encode(std::vector<std::int64_t>{((row[0] % 125) + 125) % 125, ((row[1] % 125) + 125) % 125}));
    for (const IntRow& row : got.basis()) reference.push_back(g.encode(row));
    if (got != target || span(g, lifted).elements != span(g, reference).elements) ++bad;
  }
  o.note << ' ' << kPresentations << " presentations, " << bad << " mismatches;";
  o.require(bad == 0, "canonical form depends on presentation");

  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t failing = 0;
  for (const auto& r : verify_all(S()))
    if (!r.pass) ++failing;
  const double secs = seconds_since(t0);
  o.note << " verify all: " << failing << " failing, " << secs << " s";
  o.require(failing == 0, "verify all failed");
  o.require(secs < kSuiteSeconds, "verify all too slow");
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"bijection", bijection},
      {"duality", duality},
      {"embedding", embedding},
      {"power-quotients", power_quotients},
      {"norm-limitation", norm_limitation},
      {"primary-decomposition", primary_decomposition},
      {"two-level", two_level},
      {"shape-law", shape_law},
      {"canonicity", canonicity},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << " exception: " << e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << ++n << " " << name << ":" << o.note.str() << '\n';
  }
  return failures == 0 ? 0 : 1;
}
