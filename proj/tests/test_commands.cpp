#include <gtest/gtest.h>

#include "aura/commands.hpp"

using namespace aura;
using namespace aura::cli;

namespace {

std::vector<std::string> strings(const Json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

TEST(Commands, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Commands, EnvelopeAndDigest) {
  auto a = cmd_analyze(space_input("non_idempotent"), "c");
  EXPECT_EQ(a.exit_code, kSuccess);
  EXPECT_EQ(a.report["command"], "analyze");
  EXPECT_EQ(a.report["inputs"][0], "fixture:non_idempotent");
  const auto digest = a.report["input_digest"].get<std::string>();
  EXPECT_EQ(digest.rfind("sha256:", 0), 0U);
  EXPECT_EQ(digest.size(), 7U + 64U);
  EXPECT_NE(cmd_analyze(space_input("non_idempotent"), "b").report["input_digest"], digest);
  EXPECT_EQ(strings(a.report["result"]["aura_closure"]), (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(a.report["result"]["closure_trace"]["stabilized_at"], 2);
}

TEST(Commands, AnalyzeWholeSpace) {
  auto a = cmd_analyze(space_input("medical"), "p1,p2,p3,p4,p5,p6");
  EXPECT_EQ(a.report["result"]["aura_interior"].size(), 6U);
}

TEST(Commands, RoughMedical) {
  auto r = cmd_rough(space_input("medical"), "p1,p2,p4,p5", space_input("medical_refined"));
  const auto& res = r.report["result"];
  EXPECT_EQ(res["approximation"]["accuracy"]["num"], 2);
  EXPECT_EQ(res["approximation"]["accuracy"]["den"], 6);
  EXPECT_EQ(res["approximation"]["accuracy"]["decimal"], "0.333");
  EXPECT_EQ(res["approximation"]["boundary_size"], 4);
  EXPECT_TRUE(res["is_refinement"].get<bool>());
  EXPECT_EQ(strings(res["refined_approximation"]["lower"]), (std::vector<std::string>{"p1", "p2", "p4", "p5"}));
}

TEST(Commands, SpreadAndSeparationAndEnumerate) {
  auto s = cmd_spread(space_input("epidemic_seven"), {"a", std::nullopt, std::nullopt});
  EXPECT_EQ(s.report["result"]["steps"], 4);
  EXPECT_EQ(strings(s.report["result"]["reach"]), (std::vector<std::string>{"a", "b", "c", "d", "e", "f"}));
  EXPECT_FALSE(s.report["result"].contains("reach_without_interventions"));

  auto q = cmd_spread(space_input("epidemic_seven"), {"a", "b", std::nullopt});
  EXPECT_EQ(strings(q.report["result"]["reach"]), (std::vector<std::string>{"a", "b"}));

  auto dist = cmd_spread(space_input("medical"), {"p1", std::nullopt, Input{"patch", "p2 -> {p1}\n"}});
  EXPECT_EQ(dist.exit_code, kFailure);
  EXPECT_EQ(dist.report["error"]["code"], "invalid_scope");

  auto sep = cmd_separation(space_input("trivial_on_discrete"));
  EXPECT_FALSE(sep.report["result"]["a_t0"].get<bool>());
  EXPECT_TRUE(sep.report["result"]["t2"].get<bool>());

  auto en = cmd_enumerate(space_input("finite_aura_basic"), "a_open");
  EXPECT_EQ(en.report["result"]["count"], 5);
}

TEST(Commands, MapFixture) {
  auto m = cmd_map(space_input("pre_not_semi"), space_input("pre_not_semi"), "a=a,b=a,c=c,d=c");
  EXPECT_EQ(m.exit_code, kSuccess);
  EXPECT_TRUE(m.report["result"]["profile"]["a_continuous"].get<bool>());
}

TEST(Commands, Sensor) {
  auto s = cmd_sensor(deployment_input("sensor_three"), "1,0,3,2", 3);
  const auto& res = s.report["result"];
  EXPECT_EQ(res["grid"]["points"], 483);
  EXPECT_EQ(res["target_size"], 25);
  EXPECT_EQ(res["lower_size"], 0);
  EXPECT_GT(res["upper_size"].get<int>(), 25);
  EXPECT_TRUE(res.contains("relay_reach"));
}

TEST(Commands, ErrorsAndExitCodes) {
  auto bad_label = cmd_analyze(space_input("medical"), "p1,zz");
  EXPECT_EQ(bad_label.exit_code, kUsage);
  EXPECT_EQ(bad_label.report["error"]["code"], "parse");

  auto bad_doc = cmd_validate(Input{"mem", "points: a, b\nopens:\n  {}\n  {a, b}\naura:\n  a -> {a}\n"});
  EXPECT_EQ(bad_doc.exit_code, kFailure);
  EXPECT_EQ(bad_doc.report["result"]["violations"].size(), 2U);

  auto parse = cmd_validate(Input{"mem", "points: a\nopens:\n  {z}\n"});
  EXPECT_EQ(parse.exit_code, kUsage);
  EXPECT_EQ(parse.report["error"]["message"], "mem: line 3: unknown label 'z'");

  auto cls = cmd_enumerate(space_input("medical"), "nearly_open");
  EXPECT_EQ(cls.exit_code, kUsage);
  EXPECT_EQ(cls.report["error"]["code"], "unknown_name");

  auto q = cmd_spread(space_input("finite_aura_basic"), {"a", "c", std::nullopt});
  EXPECT_EQ(q.exit_code, kFailure);
  EXPECT_EQ(q.report["error"]["code"], "precondition");

  EXPECT_EQ(cmd_fuzz(1, 5, 9).exit_code, kUsage);
  EXPECT_EQ(cmd_fuzz(1, 0, 4).exit_code, kUsage);
  EXPECT_THROW(space_input("nowhere"), Error);
  EXPECT_THROW(read_file("/nonexistent/space.txt"), Error);
}

TEST(Commands, FuzzDeterministic) {
  const auto a = render(cmd_fuzz(42, 60, 5).report, Format::compact);
  const auto b = render(cmd_fuzz(42, 60, 5).report, Format::compact);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"passed\":true"), std::string::npos);
}

TEST(Commands, ExportRoundTrips) {
  for (const auto& e : fixtures::kCatalog) {
    const std::string name(e.name);
    const auto text = export_fixture(name);
    switch (e.kind) {
      case fixtures::Kind::space:
        EXPECT_EQ(doc::encode_space(doc::decode_space(text), name, std::string(e.note)), text);
        break;
      case fixtures::Kind::deployment:
        EXPECT_EQ(doc::encode(doc::parse_deployment(text)), text);
        break;
      case fixtures::Kind::map: {
        auto m = fixtures::map(name);
        EXPECT_EQ(doc::parse_mapping(text, m.source, m.target), m.mapping);
        break;
      }
    }
  }
}
