#include "qlcft/error.hpp"
#include "qlcft/extension.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bitset>
#include <set>

using namespace qlcft;

namespace {

FieldSpec S() { return FieldSpec::make({3}, {5}, {{3, 2}, {5, 2}}); }

FiniteExtension ext(const FieldSpec& s, Reality r, FiniteExtension::ComponentMap m) {
  return FiniteExtension::make(s, r, std::move(m));
}

PrimeComponent c3(int a) { return PrimeComponent::cyclic(3, a); }
PrimeComponent c5(int a, int b, std::int64_t c) { return PrimeComponent::planar(5, a, b, c); }

} // namespace

TEST(Extension, Degree) {
  const FieldSpec s = S();
  EXPECT_EQ(degree(FiniteExtension::base(s)), 1);
  EXPECT_EQ(degree(ext(s, Reality::Nonreal, {{3, c3(1)}, {5, c5(1, 0, 0)}})), 30);
  EXPECT_EQ(degree(ext(s, Reality::Real, {{5, c5(1, 1, 0)}})), 25);
}

TEST(Extension, MakeValidates) {
  const FieldSpec s = S();
  EXPECT_THROW(ext(s, Reality::Real, {{7, PrimeComponent::cyclic(7, 1)}}), ValidationError);
  EXPECT_THROW(ext(s, Reality::Real, {{3, PrimeComponent::full(3, 2)}}), ValidationError);
  EXPECT_THROW(ext(s, Reality::Real, {{3, c3(3)}}), LevelError);
}

TEST(Extension, Normality) {
  const FieldSpec s = S();
  EXPECT_FALSE(is_normal(ext(s, Reality::Real, {{3, c3(1)}})));
  EXPECT_TRUE(is_normal(ext(s, Reality::Nonreal, {{3, c3(1)}, {5, c5(1, 0, 0)}})));
  EXPECT_TRUE(is_normal(FiniteExtension::base(s)));
}

TEST(Extension, Compositum) {
  const FieldSpec s = S();
  const auto x = ext(s, Reality::Real, {{5, c5(1, 0, 0)}});
  const auto y = ext(s, Reality::Real, {{5, c5(0, 1, 0)}});
  const auto c = compositum(s, x, y);
  EXPECT_EQ(c, ext(s, Reality::Real, {{5, c5(1, 1, 0)}}));
  EXPECT_EQ(degree(c), 25);
  EXPECT_EQ(compositum(s, x, FiniteExtension::base(s)), x);
  const auto r3 = ext(s, Reality::Real, {{3, c3(1)}});
  const auto c2 = compositum(s, r3, FiniteExtension::imaginary_base(s));
  EXPECT_FALSE(c2.is_real());
  EXPECT_EQ(degree(c2), 6);
}

TEST(Extension, CompositumRefusesBeyondLevel) {
  const FieldSpec s = S();
  const auto x = ext(s, Reality::Real, {{5, c5(1, 1, 0)}});
  const auto y = ext(s, Reality::Real, {{5, c5(1, 1, 1)}});
  EXPECT_THROW(compositum(s, x, y), LevelError);
  EXPECT_NO_THROW(compositum(s.with_min_levels({{5, 3}}), x, y));
}

TEST(Extension, Intersect) {
  const FieldSpec s = S();
  const auto x = ext(s, Reality::Real, {{5, c5(1, 0, 0)}});
  const auto y = ext(s, Reality::Real, {{5, c5(0, 1, 0)}});
  EXPECT_EQ(intersect(x, y), FiniteExtension::base(s));
  EXPECT_EQ(intersect(x, x), x);
  EXPECT_EQ(intersect(FiniteExtension::imaginary_base(s), ext(s, Reality::Real, {{3, c3(1)}})),
            FiniteExtension::base(s));
}

TEST(Extension, Embeds) {
  const FieldSpec s = S();
  const auto r3 = ext(s, Reality::Real, {{3, c3(1)}});
  EXPECT_TRUE(embeds(FiniteExtension::base(s), r3));
  EXPECT_FALSE(embeds(FiniteExtension::imaginary_base(s), r3));
  EXPECT_TRUE(embeds(ext(s, Reality::Real, {{5, c5(1, 0, 0)}}), ext(s, Reality::Nonreal, {{5, c5(1, 1, 0)}})));
  EXPECT_FALSE(embeds(ext(s, Reality::Real, {{5, c5(0, 1, 0)}}), ext(s, Reality::Nonreal, {{5, c5(1, 0, 0)}})));
}

TEST(Extension, AdjoinAndOddPart) {
  const FieldSpec s = S();
  const auto r3 = ext(s, Reality::Real, {{3, c3(1)}});
  EXPECT_EQ(degree(adjoin_i(r3)), 6);
  EXPECT_FALSE(adjoin_i(r3).is_real());
  const auto n30 = ext(s, Reality::Nonreal, {{3, c3(1)}, {5, c5(1, 0, 0)}});
  EXPECT_EQ(adjoin_i(n30), n30);
  EXPECT_EQ(adjoin_i(FiniteExtension::base(s)), FiniteExtension::imaginary_base(s));
  EXPECT_EQ(degree(odd_part(n30)), 15);
  EXPECT_EQ(odd_part(r3), r3);
  EXPECT_EQ(odd_part(FiniteExtension::imaginary_base(s)), FiniteExtension::base(s));
  EXPECT_EQ(normal_closure(r3), adjoin_i(r3));
}

TEST(Extension, GaloisShape) {
  const FieldSpec s = S();
  EXPECT_TRUE(galois_shape(FiniteExtension::imaginary_base(s)).abelian_part.trivial());
  EXPECT_EQ(galois_shape(ext(s, Reality::Nonreal, {{5, c5(1, 1, 0)}})).abelian_part.factors(),
            (std::vector<std::int64_t>{5, 5}));
  EXPECT_EQ(galois_shape(ext(s, Reality::Nonreal, {{3, c3(2)}})).abelian_part.factors(),
            (std::vector<std::int64_t>{9}));
}

TEST(Extension, EnumerationExamples) {
  const FieldSpec lat = FieldSpec::make({3}, {5}, {{3, 1}, {5, 2}});
  const auto five = enumerate_extensions(lat, 5);
  EXPECT_EQ(five.size(), 9U);
  EXPECT_EQ(five.front(), FiniteExtension::base(lat));
  EXPECT_EQ(std::count_if(five.begin(), five.end(), [](const auto& x) { return degree(x) == 5; }), 6);
  EXPECT_EQ(enumerate_extensions(S(), 1), std::vector<FiniteExtension>{FiniteExtension::base(S())});
  const FieldSpec e = FieldSpec::make({}, {}, {});
  EXPECT_EQ(enumerate_extensions(e, 100),
            (std::vector<FiniteExtension>{FiniteExtension::base(e), FiniteExtension::imaginary_base(e)}));
  EXPECT_THROW(enumerate_extensions(S(), 100), LevelError);
}

TEST(Extension, EnumerationIsSortedAndDistinct) {
  const FieldSpec s = S().with_min_levels(required_levels(S(), 100, ExtensionFilter::All));
  const auto all = enumerate_extensions(s, 100);
  EXPECT_EQ(all.size(), 138U);
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_LE(degree(all[i - 1]), degree(all[i]));
    EXPECT_NE(all[i - 1], all[i]);
  }
  std::set<FiniteExtension> distinct(all.begin(), all.end());
  EXPECT_EQ(distinct.size(), all.size());
}

TEST(Extension, SigmaClass) {
  const FieldSpec s = S();
  EXPECT_EQ(sigma_class(s, ext(s, Reality::Real, {{5, c5(1, 0, 0)}})), SigmaClass::Sigma0);
  EXPECT_EQ(sigma_class(s, ext(s, Reality::Nonreal, {{3, c3(1)}})), SigmaClass::Neither);
  EXPECT_EQ(sigma_class(s, FiniteExtension::imaginary_base(s)), SigmaClass::Sigma1);
}

class LatticeLaws : public ::testing::Test {
protected:
  void SetUp() override {
    const FieldSpec s = FieldSpec::make({3}, {5}, {{3, 2}, {5, 2}});
    spec = s.with_min_levels(required_levels(s, 30, ExtensionFilter::All));
    exts = enumerate_extensions(spec, 30);
    big = spec.with_min_levels({{3, 4}, {5, 4}});
  }
  FieldSpec spec = FieldSpec::make({}, {}, {});
  FieldSpec big = FieldSpec::make({}, {}, {});
  std::vector<FiniteExtension> exts;
};

TEST_F(LatticeLaws, CommutativeIdempotentAbsorptive) {
  for (const auto& x : exts) {
    EXPECT_EQ(compositum(big, x, x), x);
    EXPECT_EQ(intersect(x, x), x);
    for (const auto& y : exts) {
      const auto c = compositum(big, x, y);
      const auto t = intersect(x, y);
      EXPECT_EQ(c, compositum(big, y, x));
      EXPECT_EQ(t, intersect(y, x));
      EXPECT_EQ(compositum(big, x, t), x);
      EXPECT_EQ(intersect(x, c), x);
      EXPECT_TRUE(embeds(x, c));
      EXPECT_TRUE(embeds(t, x));
      EXPECT_EQ(degree(c) % degree(x), 0);
    }
  }
}

TEST_F(LatticeLaws, Associative) {
  std::vector<FiniteExtension> small;
  for (const auto& x : exts)
    if (degree(x) <= 10) small.push_back(x);
  for (const auto& x : small)
    for (const auto& y : small)
      for (const auto& z : small) {
        EXPECT_EQ(compositum(big, compositum(big, x, y), z), compositum(big, x, compositum(big, y, z)));
        EXPECT_EQ(intersect(intersect(x, y), z), intersect(x, intersect(y, z)));
      }
}

TEST_F(LatticeLaws, EmbedsIsAPartialOrder) {
  const auto imag = FiniteExtension::imaginary_base(spec);
  for (const auto& x : exts) {
    EXPECT_TRUE(embeds(x, x));
    EXPECT_EQ(is_normal(x), adjoin_i(x) == x || degree(x) == 1);
    if (!x.is_real()) EXPECT_TRUE(embeds(imag, x));
    for (const auto& y : exts) {
      if (embeds(x, y) && embeds(y, x)) EXPECT_EQ(x, y);
      if (embeds(x, y)) EXPECT_EQ(degree(y) % degree(x), 0);
      for (const auto& z : exts)
        if (embeds(x, y) && embeds(y, z)) EXPECT_TRUE(embeds(x, z));
    }
  }
}

// Model theorem at level 1: conjugacy classes of subgroups of
// (Z/3 x (Z/5)^2) x| C2, with C2 acting by inversion, are exactly the pairs
// (subgroup of the abelian part, whether an involution is present).
TEST(Extension, ConjugacyNormalization) {
  constexpr int kA = 75;
  using Set = std::bitset<2 * kA>;
  auto enc = [](int a3, int a5, int b5, int s) { return s * kA + (a3 * 25 + a5 * 5 + b5); };
  auto dec = [](int e) {
    const int s = e / kA, a = e % kA;
    return std::array<int, 4>{a / 25, (a / 5) % 5, a % 5, s};
  };
  auto mul = [&](int x, int y) {
    const auto l = dec(x), r = dec(y);
    const int sign = l[3] ? -1 : 1;
    auto md = [](int v, int m) { return ((v % m) + m) % m; };
    return enc(md(l[0] + sign * r[0], 3), md(l[1] + sign * r[1], 5), md(l[2] + sign * r[2], 5), (l[3] + r[3]) % 2);
  };
  auto inv = [&](int x) {
    const auto l = dec(x);
    if (l[3]) return x;
    return enc((3 - l[0]) % 3, (5 - l[1]) % 5, (5 - l[2]) % 5, 0);
  };
  auto close = [&](Set s) {
    std::vector<int> elems;
    for (int i = 0; i < 2 * kA; ++i)
      if (s[static_cast<std::size_t>(i)]) elems.push_back(i);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (int z : {mul(elems[i], elems[j]), mul(elems[j], elems[i])})
          if (!s[static_cast<std::size_t>(z)]) {
            s.set(static_cast<std::size_t>(z));
            elems.push_back(z);
          }
    return s;
  };
  auto key = [](const Set& s) { return s.to_string(); };

  std::set<std::string> seen;
  std::vector<Set> subgroups{Set().set(0)};
  seen.insert(key(subgroups[0]));
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    for (int g = 0; g < 2 * kA; ++g) {
      if (subgroups[i][static_cast<std::size_t>(g)]) continue;
      Set next = subgroups[i];
      next.set(static_cast<std::size_t>(g));
      next = close(next);
      if (seen.insert(key(next)).second) subgroups.push_back(next);
    }

  std::set<std::string> classes;
  std::set<std::pair<std::string, bool>> invariants;
  for (const Set& h : subgroups) {
    std::string best;
    for (int g = 0; g < 2 * kA; ++g) {
      Set conj;
      for (int x = 0; x < 2 * kA; ++x)
        if (h[static_cast<std::size_t>(x)]) conj.set(static_cast<std::size_t>(mul(mul(g, x), inv(g))));
      const std::string k = key(conj);
      if (best.empty() || k < best) best = k;
    }
    if (!classes.insert(best).second) continue;
    Set h0;
    bool involution = false;
    for (int x = 0; x < 2 * kA; ++x)
      if (h[static_cast<std::size_t>(x)]) {
        if (x < kA) h0.set(static_cast<std::size_t>(x));
        else involution = true;
      }
    EXPECT_TRUE(invariants.emplace(key(h0), involution).second) << "two classes share (H0, reality)";
  }
  // 2 subgroups of Z/3 times 8 of (Z/5)^2, each REAL or NONREAL
  EXPECT_EQ(classes.size(), 32U);

  // classes faithful at level 1: both components contain p times the lattice
  std::size_t faithful3 = 0, faithful5 = 0;
  for (const auto& c : enumerate_components(3, 1, 1)) faithful3 += c.a() <= 1 ? 1 : 0;
  for (const auto& c : enumerate_components(5, 2, 2)) {
    const std::vector<std::int64_t> e1{5, 0}, e2{0, 5};
    faithful5 += c.contains(e1) && c.contains(e2) ? 1 : 0;
  }
  const std::size_t faithful = 2 * faithful3 * faithful5;
  EXPECT_EQ(faithful, classes.size());
}
