#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/io.hpp"
#include "wreathlab/structure.hpp"

using namespace wreathlab;
using namespace wreathlab::cli;

namespace {

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "wreathlab_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

int run(const std::function<int(std::ostream&)>& body, std::string& text) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = guarded([&] { return body(out); }, err);
  text = out.str() + err.str();
  return code;
}

}  // namespace

TEST(Cli, Build) {
  std::ostringstream out;
  EXPECT_EQ(cmd_build({"C:2", "C:2", "regular"}, out), kExitOk);
  EXPECT_EQ(out.str(), "order 8, identified D:4\n");
  out.str("");
  EXPECT_EQ(cmd_build({"C:1", "S:3", "regular"}, out), kExitOk);
  EXPECT_EQ(out.str(), "order 6, identified S:3\n");
  out.str("");
  EXPECT_EQ(cmd_build({"S:3", "S:3", "natural:3"}, out), kExitOk);
  EXPECT_EQ(out.str(), "order 1296\n");

  const auto dir = scratch_dir();
  BuildOptions o{"C:2", "C:2", "regular"};
  o.out = (dir / "d4.json").string();
  o.format = "json";
  out.str("");
  EXPECT_EQ(cmd_build(o, out), kExitOk);
  auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(j["identified"], "D:4");
  EXPECT_EQ(group_from_json(read_json_file(dir / "d4.json")).order(), 8u);

  // The written file feeds back in as a group spec.
  out.str("");
  EXPECT_EQ(cmd_identify({"file:" + (dir / "d4.json").string()}, out), kExitOk);
  EXPECT_EQ(out.str(), "order 8, identified D:4\n");
  std::filesystem::remove_all(dir);
}

TEST(Cli, BuildJsonSchemaIsStable) {
  std::ostringstream a, b;
  BuildOptions small{"C:2", "C:2", "regular"};
  small.format = "json";
  BuildOptions big{"S:3", "S:3", "natural:3"};
  big.format = "json";
  cmd_build(small, a);
  cmd_build(big, b);
  auto ja = nlohmann::ordered_json::parse(a.str());
  auto jb = nlohmann::ordered_json::parse(b.str());
  std::vector<std::string> ka, kb;
  for (auto& [k, v] : ja.items()) ka.push_back(k);
  for (auto& [k, v] : jb.items()) kb.push_back(k);
  EXPECT_EQ(ka, kb);
  EXPECT_TRUE(jb["identified"].is_null());
}

TEST(Cli, ErrorsMapToExitCodes) {
  std::string text;
  EXPECT_EQ(run([](std::ostream& o) { return cmd_build({"S:4", "S:4", "regular"}, o); }, text), kExitResource);
  EXPECT_NE(text.find("32009658644406818986777955348250624"), std::string::npos);
  EXPECT_EQ(run([](std::ostream& o) { return cmd_build({"Foo", "C:2", "regular"}, o); }, text), kExitUsage);
  EXPECT_EQ(run([](std::ostream& o) { return cmd_build({"C:2", "C:2", "nope"}, o); }, text), kExitUsage);
  BuildOptions capped{"C:2", "C:2", "regular"};
  capped.size_cap = 7;
  EXPECT_EQ(run([&](std::ostream& o) { return cmd_build(capped, o); }, text), kExitResource);
  EmbedOptions bad;
  bad.mode = "kk";
  bad.group = "S:3";
  bad.normal = "stab:1";
  EXPECT_EQ(run([&](std::ostream& o) { return cmd_embed(bad, o); }, text), kExitUsage);
  bad.mode = "sideways";
  EXPECT_EQ(run([&](std::ostream& o) { return cmd_embed(bad, o); }, text), kExitUsage);
}

TEST(Cli, SizeCapResolution) {
  ::unsetenv("WREATHLAB_SIZE_CAP");
  EXPECT_EQ(resolve_size_cap(std::nullopt), kDefaultSizeCap);
  ::setenv("WREATHLAB_SIZE_CAP", "1234", 1);
  EXPECT_EQ(resolve_size_cap(std::nullopt), 1234u);
  EXPECT_EQ(resolve_size_cap(99), 99u);
  ::setenv("WREATHLAB_SIZE_CAP", "12x", 1);
  EXPECT_THROW(resolve_size_cap(std::nullopt), ParseError);
  ::unsetenv("WREATHLAB_SIZE_CAP");
  EXPECT_THROW(resolve_size_cap(0), ParseError);
}

TEST(Cli, EmbedTowerFiveSeven) {
  EmbedOptions o;
  o.mode = "tower";
  o.field = "5,7";
  o.k_generators = "5";
  o.alpha = "7";
  o.section = "eta:rho1";
  std::ostringstream out;
  EXPECT_EQ(cmd_embed(o, out), kExitOk);
  EXPECT_EQ(out.str(),
            "phi:\n"
            "  id_L -> (id_L,id_L; id_K)\n"
            "  rho1 -> (id_L,id_L; eta)\n"
            "  rho2 -> (rho2,rho2; id_K)\n"
            "  rho3 -> (rho2,rho2; eta)\n"
            "is_homomorphism: true\n"
            "is_injective: true\n"
            "image_order: 4\n"
            "wreath_order: 8\n"
            "image_is_full: false\n"
            "counterexample: null\n");
  o.section = "eta:rho2";
  std::string text;
  EXPECT_EQ(run([&](std::ostream& s) { return cmd_embed(o, s); }, text), kExitUsage);
}

TEST(Cli, EmbedKkAndOmega) {
  EmbedOptions kk;
  kk.mode = "kk";
  kk.group = "S:3";
  kk.normal = "A:3";
  kk.format = "json";
  std::ostringstream out;
  EXPECT_EQ(cmd_embed(kk, out), kExitOk);
  auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["phi"].size(), 6u);
  EXPECT_EQ(j["report"]["image_order"], 6);
  EXPECT_EQ(j["report"]["wreath_order"], 18);
  EXPECT_TRUE(j["report"]["is_injective"].get<bool>());

  EmbedOptions om;
  om.mode = "omega";
  om.group = "S:4";
  om.subgroup = "stab:4";
  om.format = "json";
  out.str("");
  EXPECT_EQ(cmd_embed(om, out), kExitOk);
  j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["report"]["wreath_order"], 31104);
  EXPECT_TRUE(j["report"]["is_injective"].get<bool>());
}

TEST(Cli, Sizes) {
  SizesOptions o;
  o.kf = 3;
  o.group = "S3";
  o.m_max = 60;
  std::ostringstream out;
  EXPECT_EQ(cmd_sizes(o, out), kExitOk);
  std::istringstream lines(out.str());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 11);
  EXPECT_NE(out.str().find("12,5.950642552587727,5.950642552587727,2kc"), std::string::npos);

  SizesOptions t;
  t.emit = "table1";
  t.kf = 2;
  out.str("");
  cmd_sizes(t, out);
  EXPECT_EQ(out.str(), "C2: m²/2, m²/2\n");

  SizesOptions s5;
  s5.kf = 5;
  s5.group = "S5";
  s5.m_max = 120;
  s5.format = "json";
  out.str("");
  cmd_sizes(s5, out);
  auto j = nlohmann::json::parse(out.str());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["m"], 120);
  EXPECT_DOUBLE_EQ(j[0]["log_regular"].get<double>(), 4.787491742782046);

  SizesOptions d;
  d.emit = "degree432";
  d.format = "json";
  out.str("");
  cmd_sizes(d, out);
  j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["ratio"], "2985984");
  EXPECT_EQ(j["omega"], "10030613004288");

  SizesOptions bad;
  bad.emit = "pie";
  std::string text;
  EXPECT_EQ(run([&](std::ostream& s) { return cmd_sizes(bad, s); }, text), kExitUsage);
}

TEST(Cli, VerifyCorruptedGroupFile) {
  const auto dir = scratch_dir();
  auto j = nlohmann::json::parse(group_to_json(construct_named("D:4")).dump());
  j["table"][3][5] = j["table"][3][6];
  write_json_file(dir / "bad.json", j);
  VerifyOptions o;
  o.depth = "sampled:10";
  o.group_file = (dir / "bad.json").string();
  std::ostringstream out;
  EXPECT_EQ(cmd_verify(o, out), kExitFail);
  auto r = nlohmann::json::parse(out.str());
  EXPECT_FALSE(r["passed"].get<bool>());
  bool found = false;
  for (const auto& item : r["results"]) {
    if (item["suite"] == "group") {
      found = true;
      EXPECT_FALSE(item["passed"].get<bool>());
      EXPECT_TRUE(item["counterexample"].is_string());
    }
  }
  EXPECT_TRUE(found);
  std::filesystem::remove_all(dir);

  VerifyOptions ok;
  ok.suite = "cocycle";
  ok.format = "text";
  out.str("");
  EXPECT_EQ(cmd_verify(ok, out), kExitOk);
  EXPECT_EQ(out.str(), "cocycle relation PASS (320 checks)\n");
}
