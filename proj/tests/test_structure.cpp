#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "wreathlab/errors.hpp"
#include "wreathlab/structure.hpp"

using namespace wreathlab;

namespace {

std::map<std::uint32_t, std::size_t> profile(const FiniteGroup& g) {
  std::map<std::uint32_t, std::size_t> out;
  for (auto o : element_orders(g)) ++out[o];
  return out;
}

}  // namespace

TEST(Named, Orders) {
  const std::pair<const char*, std::size_t> cases[] = {
      {"C:7", 7},   {"D:4", 8},   {"D:5", 10},  {"S:3", 6},         {"S:4", 24},  {"S:5", 120},
      {"A:4", 12},  {"A:5", 60},  {"AGL:5", 20}, {"AGL:3", 6},      {"V4", 4},    {"Q8", 8},
      {"C:2 \xC3\x97 C:2", 4}, {"S:3xC:2", 12}, {"C:1", 1}};
  for (const auto& [spec, order] : cases) EXPECT_EQ(construct_named(spec).order(), order) << spec;
}

TEST(Named, RejectsBadSpecs) {
  EXPECT_THROW(construct_named("Z:3"), ParseError);
  EXPECT_THROW(construct_named("C:0"), ParseError);
  EXPECT_THROW(construct_named("AGL:4"), Error);
  EXPECT_THROW(construct_named("S:9"), Error);
}

TEST(Named, ElementOrderProfiles) {
  // Hand-counted: S4 has 1 identity, 9 involutions, 8 three-cycles, 6 four-cycles.
  EXPECT_EQ(profile(construct_named("S:4")), (std::map<std::uint32_t, std::size_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}));
  EXPECT_EQ(profile(construct_named("Q8")), (std::map<std::uint32_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}}));
  EXPECT_EQ(profile(construct_named("D:4")), (std::map<std::uint32_t, std::size_t>{{1, 1}, {2, 5}, {4, 2}}));
  EXPECT_EQ(profile(construct_named("A:5")),
            (std::map<std::uint32_t, std::size_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}));
  EXPECT_EQ(profile(construct_named("AGL:5")),
            (std::map<std::uint32_t, std::size_t>{{1, 1}, {2, 5}, {4, 10}, {5, 4}}));
}

TEST(Named, PermutationDataMatchesProduct) {
  for (const char* spec : {"S:4", "A:4", "D:5", "AGL:7", "V4"}) {
    auto g = construct_named(spec);
    const auto* p = g.permutations();
    ASSERT_NE(p, nullptr) << spec;
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); ++y)
        for (std::size_t i = 0; i < p->degree; ++i)
          ASSERT_EQ(p->of(g.mul(x, y))[i], p->of(x)[p->of(y)[i]]);
  }
}

TEST(Named, AglLabelsEvaluate) {
  auto g = construct_named("AGL:3");
  const auto x = g.find_label("2t+1");
  ASSERT_TRUE(x.has_value());
  const auto* p = g.permutations();
  EXPECT_EQ(p->of(*x)[0], 1);
  EXPECT_EQ(p->of(*x)[1], 0);
  EXPECT_EQ(p->of(*x)[2], 2);
}

TEST(Structure, CenterAndCore) {
  EXPECT_EQ(center(construct_named("D:4")).order(), 2u);
  EXPECT_EQ(center(construct_named("S:4")).order(), 1u);
  EXPECT_EQ(center(construct_named("Q8")).order(), 2u);
  auto s4 = construct_named("S:4");
  // Point stabilizer of 4: permutations fixing the last point.
  std::vector<Element> stab;
  for (Element x = 0; x < s4.order(); ++x)
    if (s4.permutations()->of(x)[3] == 3) stab.push_back(x);
  auto h = subgroup_from_elements(s4, stab);
  EXPECT_FALSE(is_normal(s4, h));
  EXPECT_EQ(normal_core(s4, h).order(), 1u);
  EXPECT_THROW(quotient(s4, h), NonNormalSubgroup);
}

TEST(Structure, QuotientOfS4ByV4) {
  auto s4 = construct_named("S:4");
  std::vector<Element> v4;
  for (Element x = 0; x < s4.order(); ++x) {
    auto o = element_order(s4, x);
    const auto p = s4.permutations()->of(x);
    const bool fixed_point = p[0] == 0 || p[1] == 1 || p[2] == 2 || p[3] == 3;
    if (o == 1 || (o == 2 && !fixed_point)) v4.push_back(x);
  }
  ASSERT_EQ(v4.size(), 4u);
  auto n = subgroup_from_elements(s4, v4);
  EXPECT_TRUE(is_normal(s4, n));
  auto q = quotient(s4, n);
  EXPECT_EQ(q.group.order(), 6u);
  EXPECT_FALSE(q.group.is_abelian());
  EXPECT_TRUE(q.projection.is_homomorphism());
  EXPECT_EQ(q.projection.kernel(), v4);
}

TEST(Structure, GeneratorsGenerate) {
  for (const char* spec : {"S:5", "D:6", "Q8", "C:2xC:2xC:2", "AGL:7"}) {
    auto g = construct_named(spec);
    auto gens = greedy_generators(g);
    EXPECT_EQ(subgroup_generated(g, gens).order(), g.order()) << spec;
  }
}

TEST(Structure, ConjugacyClassCounts) {
  auto count = [](const char* spec) {
    auto c = conjugacy_classes(construct_named(spec));
    return static_cast<std::size_t>(*std::max_element(c.begin(), c.end())) + 1;
  };
  EXPECT_EQ(count("S:4"), 5u);
  EXPECT_EQ(count("A:5"), 5u);
  EXPECT_EQ(count("D:4"), 5u);
  EXPECT_EQ(count("C:6"), 6u);
}
