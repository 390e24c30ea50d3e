#include "qlcft/dot.hpp"
#include "qlcft/error.hpp"
#include "qlcft/json_io.hpp"
#include "qlcft/norm.hpp"
#include "qlcft/units.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace qlcft;

namespace {

FieldSpec S() { return FieldSpec::make({3}, {5}, {{3, 2}, {5, 2}}); }

std::size_t count_lines(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (line.find(needle) != std::string::npos) ++n;
  return n;
}

} // namespace

TEST(Json, SpecRoundTrip) {
  const FieldSpec s = S();
  EXPECT_EQ(field_spec_from_json(to_json(s)), s);
  EXPECT_EQ(field_spec_from_json(parse_json(R"({"pi1":[],"pi2":[],"level":{}})")), FieldSpec::make({}, {}, {}));
}

TEST(Json, StrictSpecParsing) {
  for (const char* bad : {R"({"pi1":[3],"pi2":[5]})", R"({"pi1":[3],"pi2":[5],"level":{"3":1,"5":1},"x":1})",
                          R"({"pi1":[4],"pi2":[],"level":{"4":1}})", R"({"pi1":["3"],"pi2":[],"level":{"3":1}})",
                          R"({"pi1":[3],"pi2":[3],"level":{"3":1}})", R"([1,2])"})
    EXPECT_THROW(field_spec_from_json(parse_json(bad)), ValidationError) << bad;
  EXPECT_THROW(parse_json("{not json"), ValidationError);
}

TEST(Json, ExtensionRoundTrip) {
  const FieldSpec s = S();
  const FieldSpec wide = s.with_min_levels(required_levels(s, 50, ExtensionFilter::All));
  for (const auto& x : enumerate_extensions(wide, 50))
    EXPECT_EQ(extension_from_json(wide, to_json(x)), x);
  const Json j = to_json(FiniteExtension::make(s, Reality::Nonreal, {{5, PrimeComponent::planar(5, 1, 0, 0)}}));
  EXPECT_EQ(j.dump(), R"({"components":{"5":{"a":1,"b":0,"c":0}},"real":false})");
  EXPECT_EQ(to_json(FiniteExtension::base(s)).dump(), R"({"components":{},"real":true})");
}

TEST(Json, GeneratorsAreCanonicalized) {
  const FieldSpec s = S();
  const auto x = extension_from_json(s, parse_json(R"({"real":true,"components":{"5":{"generators":[[5,0],[3,1]]}}})"));
  EXPECT_EQ(x.component(5), PrimeComponent::planar(5, 0, 1, 2));
  const auto y = extension_from_json(s, parse_json(R"({"real":true,"components":{"3":{"generators":[[18]]}}})"));
  EXPECT_EQ(y.component(3), PrimeComponent::cyclic(3, 2));
}

TEST(Json, StrictExtensionParsing) {
  const FieldSpec s = S();
  for (const char* bad : {R"({"components":{}})", R"({"real":1,"components":{}})",
                          R"({"real":true,"components":{"7":{"exp":1}}})",
                          R"({"real":true,"components":{"5":{"exp":1}}})",
                          R"({"real":true,"components":{"5":{"a":1,"b":0,"c":7}}})",
                          R"({"real":true,"components":{"3":{"exp":1,"a":0}}})"})
    EXPECT_THROW(extension_from_json(s, parse_json(bad)), ValidationError) << bad;
  EXPECT_THROW(extension_from_json(s, parse_json(R"({"real":true,"components":{"3":{"exp":5}}})")), LevelError);
}

TEST(Json, NormRoundTrip) {
  const FieldSpec s = S();
  for (std::int64_t n : {1, 2, 5, 10, 25, 50})
    for (const auto& u : norm_groups_of_index(s, n).groups) EXPECT_EQ(norm_subgroup_from_json(s, to_json(u)), u);
  const auto u1 = NormSubgroupE1::make(s, {{5, PrimeComponent::planar(5, 0, 1, 0)}});
  EXPECT_EQ(norm_subgroup_e1_from_json(s, to_json(u1)), u1);
  EXPECT_THROW(norm_subgroup_from_json(s, parse_json(R"({"two_part":3,"components":{}})")), ValidationError);
  EXPECT_THROW(norm_subgroup_from_json(s, parse_json(R"({"two_part":1,"components":{"3":{"exp":1}}})")),
               ValidationError);
}

TEST(Json, ShapesAndPairs) {
  EXPECT_EQ(to_json(GroupShape({5, 30})).dump(), "[5,30]");
  EXPECT_EQ(to_json(greatest_admissible_pair(S(), 30)).dump(), R"({"nE":30,"nE1":5})");
}

TEST(Dot, EmptySpec) {
  const std::string dot = emit_lattice(FieldSpec::make({}, {}, {}), 10, ExtensionFilter::All);
  EXPECT_EQ(dot.rfind("digraph lattice {", 0), 0U);
  EXPECT_EQ(count_lines(dot, "[label="), 2U);
  EXPECT_EQ(count_lines(dot, "->"), 1U);
  EXPECT_NE(dot.find("1/real/SIGMA0"), std::string::npos);
  EXPECT_NE(dot.find("2/nonreal/SIGMA1"), std::string::npos);
}

TEST(Dot, ClassFieldLattice) {
  const FieldSpec lat = FieldSpec::make({3}, {5}, {{3, 1}, {5, 2}});
  const std::string dot = emit_lattice(lat, 10, ExtensionFilter::ClassFields);
  // E, E(i), six of degree 5 and their six nonreal lifts
  EXPECT_EQ(count_lines(dot, "[label="), 14U);
  EXPECT_NE(dot.find("/i=10"), std::string::npos);
  EXPECT_EQ(dot, emit_lattice(lat, 10, ExtensionFilter::ClassFields));
  // E(i) over E, each degree-5 field over E, each lift over its field and over E(i)
  EXPECT_EQ(count_lines(dot, "->"), 19U);
}

TEST(Dot, RefusesBeyondLevels) {
  EXPECT_THROW(emit_lattice(S(), 100, ExtensionFilter::All), LevelError);
}
