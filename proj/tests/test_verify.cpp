#include <gtest/gtest.h>

#include <filesystem>

#include "wreathlab/errors.hpp"
#include "wreathlab/io.hpp"
#include "wreathlab/specs.hpp"
#include "wreathlab/structure.hpp"
#include "wreathlab/verify.hpp"

using namespace wreathlab;

namespace {

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "wreathlab_verify_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Specs, Subgroups) {
  auto s4 = construct_named("S:4");
  auto stab = parse_subgroup(s4, "stab:4");
  EXPECT_EQ(stab.order(), 6u);
  for (auto x : stab.elements()) EXPECT_EQ(s4.permutations()->of(x)[3], 3);
  EXPECT_THROW(parse_subgroup(s4, "stab:5"), ParseError);
  EXPECT_THROW(parse_subgroup(s4, "stab:x"), ParseError);
  EXPECT_EQ(parse_subgroup(s4, "V4").order(), 4u);
  EXPECT_TRUE(is_normal(s4, parse_subgroup(s4, "V4")));
  EXPECT_EQ(parse_subgroup(s4, "A:4").order(), 12u);
  EXPECT_EQ(parse_subgroup(s4, "center").order(), 1u);
  EXPECT_EQ(parse_subgroup(s4, "whole").order(), 24u);
  EXPECT_EQ(parse_subgroup(s4, "trivial").order(), 1u);
  EXPECT_THROW(parse_subgroup(s4, "C:5"), InvariantError);

  auto s3 = construct_named("S:3");
  auto a3 = parse_subgroup(s3, "A:3");
  EXPECT_EQ(a3.order(), 3u);
  EXPECT_TRUE(is_normal(s3, a3));
  auto d4 = construct_named("D:4");
  EXPECT_EQ(parse_subgroup(d4, "gens:r").order(), 4u);
  EXPECT_EQ(parse_subgroup(d4, "gens:s, 4").order(), 4u);
  EXPECT_THROW(parse_subgroup(d4, "gens:q"), ParseError);
  EXPECT_EQ(parse_subgroup(construct_named("Q8"), "center").order(), 2u);
}

TEST(Specs, TwoGeneratedSubgroupsOfS3) {
  // Trivial, three of order 2, A3 and S3.
  auto subs = two_generated_subgroups(construct_named("S:3"));
  ASSERT_EQ(subs.size(), 6u);
  EXPECT_EQ(subs.front().order(), 1u);
  EXPECT_EQ(subs.back().order(), 6u);
}

TEST(Specs, OmegaModes) {
  auto s3 = construct_named("S:3");
  EXPECT_EQ(parse_omega(s3, "regular").size(), 6u);
  EXPECT_EQ(parse_omega(s3, "natural:3").size(), 3u);
  EXPECT_THROW(parse_omega(s3, "natural:4"), InvariantError);
  EXPECT_EQ(parse_omega(s3, "cosets:stab:1").size(), 3u);
  EXPECT_THROW(parse_omega(s3, "bogus"), ParseError);

  const auto dir = scratch_dir();
  write_json_file(dir / "omega.json", action_to_json(natural_action(s3)));
  auto omega = parse_omega(s3, "file:" + (dir / "omega.json").string());
  EXPECT_EQ(omega.size(), 3u);
  EXPECT_TRUE(omega.group().same_as(s3));
  EXPECT_THROW(parse_omega(construct_named("C:6"), "file:" + (dir / "omega.json").string()), InvariantError);
  std::filesystem::remove_all(dir);
}

TEST(Specs, SectionsAndTowers) {
  auto t = parse_tower("5,7", "5", "7");
  EXPECT_EQ(t.l().degree(), 4u);
  EXPECT_THROW(parse_tower("5,x", "5", "7"), ParseError);
  EXPECT_EQ(parse_int_list(" 2, 3 ,5"), (std::vector<std::int64_t>{2, 3, 5}));
  try {
    parse_int_list("2,3,y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos);
  }
  auto s3 = construct_named("S:3");
  auto c2 = construct_named("C:2");
  auto ov = parse_section_overrides(c2, s3, "1:213");
  ASSERT_EQ(ov.size(), 1u);
  EXPECT_EQ(ov[0], (std::pair<Element, Element>{1, *s3.find_label("213")}));
  EXPECT_THROW(parse_section_overrides(c2, s3, "1-213"), ParseError);
  EXPECT_TRUE(parse_section_overrides(c2, s3, "").empty());
}

TEST(Specs, MatchPermutations) {
  auto iso = match_permutations(construct_named("AGL:3"), construct_named("S:3"));
  EXPECT_TRUE(iso.is_homomorphism());
  EXPECT_TRUE(iso.is_injective());
  EXPECT_THROW(match_permutations(construct_named("A:4"), construct_named("S:3")), InvariantError);
}

TEST(Verify, DepthParsing) {
  EXPECT_EQ(VerifyDepth::parse("exhaustive").samples, 0u);
  EXPECT_EQ(VerifyDepth::parse("sampled:25", 4).samples, 25u);
  EXPECT_EQ(VerifyDepth::parse("sampled:25", 4).seed, 4u);
  EXPECT_THROW(VerifyDepth::parse("sampled:0"), ParseError);
  EXPECT_THROW(VerifyDepth::parse("some"), ParseError);
}

TEST(Verify, AllSuitesPassAndAreSorted) {
  auto results = run_suites("all", VerifyDepth::parse("exhaustive"));
  EXPECT_TRUE(all_passed(results));
  for (std::size_t i = 1; i < results.size(); ++i) {
    EXPECT_LE(std::tie(results[i - 1].suite, results[i - 1].property),
              std::tie(results[i].suite, results[i].property));
  }
  // Cocycle triples: 4*4*2 + 4*4*2 + 8*8*4.
  EXPECT_EQ(results.front().suite, "cocycle");
  EXPECT_EQ(results.front().checked, 320u);
  auto j = results_to_json(results);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_TRUE(j["results"][0]["counterexample"].is_null());
  EXPECT_THROW(run_suites("nope", {}), ParseError);
}

TEST(Verify, SampledIsDeterministic) {
  auto a = run_suites("theta", VerifyDepth::parse("sampled:50", 7));
  auto b = run_suites("theta", VerifyDepth::parse("sampled:50", 7));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].checked, b[i].checked);
  EXPECT_TRUE(all_passed(a));
}

TEST(Verify, CorruptedGroupFileFails) {
  const auto dir = scratch_dir();
  auto j = nlohmann::json::parse(group_to_json(construct_named("S:3")).dump());
  write_json_file(dir / "good.json", j);
  auto good = run_suites("group", {}, dir / "good.json");
  ASSERT_EQ(good.size(), 1u);
  EXPECT_TRUE(good[0].passed);
  auto kk = run_suites("kk", {}, dir / "good.json");
  EXPECT_TRUE(all_passed(kk));

  j["table"][2][3] = j["table"][2][4];
  write_json_file(dir / "bad.json", j);
  auto bad = run_suites("all", VerifyDepth::parse("sampled:20"), dir / "bad.json");
  EXPECT_FALSE(all_passed(bad));
  auto it = std::find_if(bad.begin(), bad.end(), [](const PropertyResult& r) { return r.suite == "group"; });
  ASSERT_NE(it, bad.end());
  EXPECT_FALSE(it->passed);
  ASSERT_TRUE(it->counterexample.has_value());
  EXPECT_FALSE(it->counterexample->empty());
  std::filesystem::remove_all(dir);
}
