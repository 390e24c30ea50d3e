#include "qlcft/error.hpp"
#include "qlcft/norm.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace qlcft;

namespace {

FieldSpec S() { return FieldSpec::make({3}, {5}, {{3, 2}, {5, 2}}); }

PrimeComponent c5(int a, int b, std::int64_t c) { return PrimeComponent::planar(5, a, b, c); }

std::vector<std::int64_t> shape(const FieldSpec& s, const NormSubgroup& u) {
  return quotient_shape(s, u).factors();
}

} // namespace

TEST(Norm, GroupOfExtension) {
  const FieldSpec s = S();
  const auto x = FiniteExtension::make(s, Reality::Nonreal,
                                       {{3, PrimeComponent::cyclic(3, 1)}, {5, c5(1, 0, 0)}});
  const auto u = norm_group(s, x);
  EXPECT_EQ(u, NormSubgroup::make(s, 2, {{5, c5(1, 0, 0)}}));
  EXPECT_EQ(index(s, u), 10);
  EXPECT_EQ(u.index(), 10);
  EXPECT_EQ(norm_group(s, FiniteExtension::base(s)), NormSubgroup::full(s));
  EXPECT_EQ(index(s, norm_group(s, FiniteExtension::imaginary_base(s))), 2);
}

TEST(Norm, MakeValidates) {
  const FieldSpec s = S();
  EXPECT_THROW(NormSubgroup::make(s, 3, {}), ValidationError);
  EXPECT_THROW(NormSubgroup::make(s, 1, {{3, PrimeComponent::cyclic(3, 1)}}), ValidationError);
  EXPECT_THROW(NormSubgroup::make(s, 1, {{5, c5(3, 0, 0)}}), LevelError);
}

TEST(Norm, QuotientShapes) {
  const FieldSpec s = S();
  EXPECT_EQ(shape(s, NormSubgroup::make(s, 2, {{5, c5(1, 1, 0)}})), (std::vector<std::int64_t>{5, 10}));
  EXPECT_TRUE(shape(s, NormSubgroup::full(s)).empty());
  EXPECT_EQ(shape(s, NormSubgroup::make(s, 2, {})), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(shape(s, NormSubgroup::make(s, 1, {{5, c5(2, 0, 0)}})), (std::vector<std::int64_t>{25}));
}

TEST(Norm, MeetJoinContains) {
  const FieldSpec s = S();
  const auto u = NormSubgroup::make(s, 1, {{5, c5(1, 0, 0)}});
  const auto v = NormSubgroup::make(s, 2, {{5, c5(0, 1, 0)}});
  const auto m = meet(s, u, v);
  EXPECT_EQ(m, NormSubgroup::make(s, 2, {{5, c5(1, 1, 0)}}));
  EXPECT_EQ(join(s, u, v), NormSubgroup::full(s));
  EXPECT_TRUE(contains(u, m));
  EXPECT_TRUE(contains(v, m));
  EXPECT_FALSE(contains(u, v));
  EXPECT_TRUE(contains(NormSubgroup::full(s), u));
}

TEST(Norm, ClassFields) {
  const FieldSpec s = S();
  const auto u = NormSubgroup::make(s, 2, {{5, c5(1, 0, 0)}});
  const auto l = class_field_of(s, u);
  EXPECT_FALSE(l.is_real());
  EXPECT_EQ(degree(l), 10);
  EXPECT_TRUE(l.component(3).is_full());

  const auto x = FiniteExtension::make(s, Reality::Real, {{3, PrimeComponent::cyclic(3, 2)}, {5, c5(0, 1, 0)}});
  const auto cl = cl_of(s, x);
  EXPECT_EQ(cl, FiniteExtension::make(s, Reality::Real, {{5, c5(0, 1, 0)}}));
  EXPECT_TRUE(embeds(cl, x));
  EXPECT_FALSE(class_field_is_abelian_part(s, x));
  const auto y = FiniteExtension::make(s, Reality::Nonreal, {{3, PrimeComponent::cyclic(3, 1)}});
  EXPECT_TRUE(class_field_is_abelian_part(s, y));
  EXPECT_EQ(maximal_abelian_subextension(s, y), FiniteExtension::imaginary_base(s));
}

TEST(Norm, GroupsOfIndex) {
  const FieldSpec s = S();
  const auto one = norm_groups_of_index(s, 1);
  ASSERT_EQ(one.groups.size(), 1U);
  EXPECT_EQ(one.groups[0], NormSubgroup::full(s));
  EXPECT_FALSE(one.reason);

  const auto ten = norm_groups_of_index(s, 10);
  EXPECT_EQ(ten.groups.size(), 6U);
  for (const auto& u : ten.groups) {
    EXPECT_EQ(index(s, u), 10);
    EXPECT_EQ(u.two_part(), 2);
  }
  EXPECT_TRUE(std::is_sorted(ten.groups.begin(), ten.groups.end()));

  for (std::int64_t bad : {3, 4, 7}) {
    const auto r = norm_groups_of_index(s, bad);
    EXPECT_TRUE(r.groups.empty()) << bad;
    EXPECT_TRUE(r.reason.has_value()) << bad;
  }
  // 5^3 needs level 3
  EXPECT_TRUE(norm_groups_of_index(s, 125).reason.has_value());
  EXPECT_EQ(norm_groups_of_index(s, 25).groups.size(), 31U);
}

TEST(Norm, DualityOverClassFields) {
  const FieldSpec s = S();
  std::set<NormSubgroup> images;
  for (const auto& x : enumerate_extensions(s, 50, ExtensionFilter::ClassFields)) {
    ASSERT_NE(sigma_class(s, x), SigmaClass::Neither);
    const auto u = norm_group(s, x);
    EXPECT_EQ(class_field_of(s, u), x);
    EXPECT_EQ(index(s, u), degree(x));
    EXPECT_TRUE(images.insert(u).second);
  }
  for (std::int64_t n = 1; n <= 50; ++n)
    for (const auto& u : norm_groups_of_index(s, n).groups) {
      EXPECT_EQ(norm_group(s, class_field_of(s, u)), u);
      EXPECT_TRUE(images.count(u));
    }
}

TEST(Norm, IndexDividesDegree) {
  const FieldSpec s = S().with_min_levels(required_levels(S(), 50, ExtensionFilter::All));
  for (const auto& x : enumerate_extensions(s, 50)) {
    const auto u = norm_group(s, x);
    EXPECT_EQ(degree(x) % index(s, u), 0);
    EXPECT_EQ(index(s, u) == degree(x), sigma_class(s, x) != SigmaClass::Neither);
    EXPECT_EQ(norm_group(s, cl_of(s, x)), u);
    EXPECT_TRUE(embeds(cl_of(s, x), x));
  }
}

TEST(Norm, CompositumAndIntersectionDuality) {
  const FieldSpec s = S();
  const FieldSpec big = s.with_min_levels({{5, 4}});
  const auto cf = enumerate_extensions(s, 25, ExtensionFilter::ClassFields);
  for (const auto& x : cf)
    for (const auto& y : cf) {
      const auto ux = norm_group(big, x), uy = norm_group(big, y);
      EXPECT_EQ(norm_group(big, compositum(big, x, y)), meet(big, ux, uy));
      EXPECT_EQ(norm_group(big, intersect(x, y)), join(big, ux, uy));
      EXPECT_EQ(embeds(x, y), contains(ux, uy));
    }
}

TEST(Norm, E1Level) {
  const FieldSpec s = S();
  const auto x = FiniteExtension::make(s, Reality::Real, {{3, PrimeComponent::cyclic(3, 1)}, {5, c5(1, 0, 0)}});
  const auto u1 = norm_group_over_e1(s, x);
  EXPECT_EQ(u1, NormSubgroupE1::make(s, {{5, c5(1, 0, 0)}}));
  EXPECT_EQ(u1.index(), 5);
  EXPECT_EQ(quotient_shape_e1(s, u1).factors(), (std::vector<std::int64_t>{5}));
  EXPECT_EQ(restrict_to_base(s, u1, true), NormSubgroup::make(s, 2, {{5, c5(1, 0, 0)}}));
  EXPECT_EQ(extend_to_e1(s, restrict_to_base(s, u1, false)), u1);
  EXPECT_EQ(NormSubgroupE1::full(s).index(), 1);
}
