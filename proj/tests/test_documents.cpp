#include <gtest/gtest.h>

#include "support.hpp"

using namespace aura;

namespace {

const char* kBasic = R"(# four points
name: tiny
points: a, b
opens:
  {}
  {a}
  {a, b}
aura:
  a -> {a}
  b -> {a, b}
)";

std::size_t parse_error_line(std::string_view text) {
  try {
    doc::parse_space(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Documents, ParseBasic) {
  auto d = doc::parse_space(kBasic);
  EXPECT_EQ(d.name, "tiny");
  EXPECT_EQ(d.points, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(d.opens.size(), 3U);
  EXPECT_EQ(d.open_lines.front(), 5U);
  EXPECT_EQ(d.aura_lines[1], 10U);
  EXPECT_TRUE(doc::validate(d).ok());
  auto s = doc::to_space(d);
  EXPECT_EQ(s.label(1), "b");
  EXPECT_EQ(s.aura(1), PointSet::full(2));
}

TEST(Documents, FixturesRoundTrip) {
  for (auto name : fixtures::names(fixtures::Kind::space)) {
    auto s = fixtures::space(name);
    const auto text = doc::encode_space(s, std::string(name));
    auto back = doc::decode_space(text);
    EXPECT_EQ(back, s) << name;
    EXPECT_EQ(doc::labels_of(back), doc::labels_of(s)) << name;
    EXPECT_EQ(doc::encode_space(back, std::string(name)), text) << name;
  }
  for (auto name : fixtures::names(fixtures::Kind::deployment)) {
    doc::DeploymentDocument d{std::string(name), "", fixtures::deployment(name)};
    const auto text = doc::encode(d);
    EXPECT_EQ(doc::encode(doc::parse_deployment(text)), text);
  }
}

TEST(Documents, EncodeIsCanonical) {
  auto shuffled = std::string(kBasic);
  shuffled.replace(shuffled.find("  {}\n  {a}\n"), 11, "  {a}\n  {}\n");
  EXPECT_EQ(doc::encode(doc::parse_space(shuffled)), doc::encode(doc::parse_space(kBasic)));
}

TEST(Documents, ParseErrorsCarryLines) {
  EXPECT_EQ(parse_error_line("points: a\nopens:\n  {z}\n"), 3U);
  EXPECT_EQ(parse_error_line("points: a, a\n"), 1U);
  EXPECT_EQ(parse_error_line("points: a\ncolour: red\n"), 2U);
  EXPECT_EQ(parse_error_line("opens:\n"), 1U);
  EXPECT_EQ(parse_error_line("points: a\naura:\n  a -> {a}\n  a -> {a}\n"), 4U);
  EXPECT_EQ(parse_error_line("points: a\naura:\n  a {a}\n"), 3U);
  EXPECT_EQ(parse_error_line("points: a\nopens:\n  {a\n"), 3U);
  EXPECT_EQ(parse_error_line("  a\n"), 1U);
  EXPECT_EQ(parse_error_line("name: x\n"), 1U);
}

TEST(Documents, ValidationRules) {
  auto missing = doc::validate(doc::parse_space("points: a, b\nopens:\n  {}\n  {a, b}\naura:\n  a -> {a, b}\n"));
  ASSERT_EQ(missing.violations.size(), 1U);
  EXPECT_EQ(missing.violations[0].rule, "missing_aura");
  EXPECT_NE(missing.violations[0].message.find("'b'"), std::string::npos);

  auto codomain = doc::validate(doc::parse_space("points: a, b\nopens:\n  {}\n  {a, b}\naura:\n  a -> {a}\n  b -> {a, b}\n"));
  ASSERT_EQ(codomain.violations.size(), 1U);
  EXPECT_EQ(codomain.violations[0].rule, "open_codomain");

  auto self = doc::validate(doc::parse_space("points: a, b\nopens:\n  {}\n  {a, b}\n  {b}\naura:\n  a -> {b}\n  b -> {b}\n"));
  ASSERT_EQ(self.violations.size(), 1U);
  EXPECT_EQ(self.violations[0].rule, "self_membership");

  auto topo = doc::validate(doc::parse_space("points: a, b, c\nopens:\n  {}\n  {a}\n  {b}\n  {a, b, c}\n"));
  EXPECT_EQ(topo.violations.front().rule, "union_closure");
  try {
    doc::to_space(doc::parse_space("points: a, b, c\nopens:\n  {}\n  {a}\n  {b}\n  {a, b, c}\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_topology);
  }
}

TEST(Documents, ScopePatchAndMapping) {
  auto s = fixtures::space("medical");
  auto patch = doc::parse_scope_patch("aura:\n  p2 -> {p1, p2}\n  p5 -> {p4, p5}\n", s);
  EXPECT_EQ(s.with_scope(patch), fixtures::space("medical_refined"));
  EXPECT_THROW(doc::parse_scope_patch("p2 -> {p1}\np2 -> {p2}\n", s), ParseError);

  auto m = fixtures::map("partition_collapse");
  const auto text = doc::encode_mapping(m.mapping, m.source, m.target);
  EXPECT_EQ(text, "a=a,b=a,c=c,d=c");
  EXPECT_EQ(doc::parse_mapping(text, m.source, m.target), m.mapping);
  EXPECT_THROW(doc::parse_mapping("a=a,b=a,c=c", m.source, m.target), ParseError);
  EXPECT_THROW(doc::parse_mapping("a=a,a=b,c=c,d=c", m.source, m.target), ParseError);
  EXPECT_THROW(doc::parse_mapping("a=q,b=a,c=c,d=c", m.source, m.target), ParseError);
}

TEST(Documents, Deployments) {
  auto d = doc::parse_deployment("region: 0 0 2 2\nresolution: 0.25\nsensor: 1 1 0.75\nuncovered: delta 0.3\n");
  EXPECT_EQ(d.deployment.sensors.size(), 1U);
  EXPECT_DOUBLE_EQ(d.deployment.resolution, 0.25);
  EXPECT_EQ(d.deployment.uncovered.mode, sensor::UncoveredAura::Mode::delta_ball);
  EXPECT_THROW(doc::parse_deployment("resolution: 1\n"), ParseError);
  EXPECT_THROW(doc::parse_deployment("region: 0 0 1\nresolution: 1\n"), ParseError);
  EXPECT_THROW(doc::parse_deployment("region: 0 0 1 1\nresolution: -1\n"), ParseError);
  EXPECT_THROW(doc::parse_deployment("region: 0 0 1 1\nresolution: 1\nuncovered: maybe\n"), ParseError);
  auto r = doc::parse_rect("1,0,3,2");
  EXPECT_DOUBLE_EQ(r.x1, 3);
  EXPECT_THROW(doc::parse_rect("1,0,3"), ParseError);
  EXPECT_THROW(doc::parse_rect("3,0,1,2"), ParseError);
}

TEST(Fixtures, Catalog) {
  EXPECT_EQ(fixtures::names().size(), fixtures::kCatalog.size());
  EXPECT_EQ(fixtures::names(fixtures::Kind::map), (std::vector<std::string_view>{"partition_collapse"}));
  try {
    fixtures::space("nowhere");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_name);
  }
  EXPECT_THROW(fixtures::space("sensor_three"), Error);
  EXPECT_THROW(fixtures::map("medical"), Error);
  EXPECT_THROW(fixtures::deployment("medical"), Error);
  for (auto name : fixtures::names(fixtures::Kind::space)) EXPECT_NO_THROW(fixtures::space(name));
}

TEST(Fixtures, FiniteBasicShape) {
  auto s = fixtures::space("finite_aura_basic");
  EXPECT_EQ(s.topology().opens(), test::family(4, {"", "a", "b", "ab", "abc", "abcd"}));
  EXPECT_EQ(s.aura(1), test::letters(4, "ab"));
  auto e = fixtures::space("epidemic_seven");
  EXPECT_EQ(e.aura(1), test::letters(7, "bcd"));
  EXPECT_TRUE(e.topology().is_discrete());
}
