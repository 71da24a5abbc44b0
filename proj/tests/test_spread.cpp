#include <gtest/gtest.h>

#include "support.hpp"

using namespace aura;
using aura::test::letters;

TEST(Spread, EpidemicSteps) {
  auto s = fixtures::space("epidemic_seven");
  EXPECT_EQ(spread_step(s, letters(7, "a")), letters(7, "ab"));
  EXPECT_EQ(spread_step(s, letters(7, "ab")), letters(7, "abcd"));
  EXPECT_TRUE(spread_step(s, PointSet(7)).empty());
}

TEST(Spread, EpidemicTrace) {
  auto t = spread_trace(fixtures::space("epidemic_seven"), letters(7, "a"));
  std::vector<PointSet> want{letters(7, "a"), letters(7, "ab"), letters(7, "abcd"), letters(7, "abcde"),
                             letters(7, "abcdef")};
  EXPECT_EQ(t.stages, want);
  EXPECT_EQ(t.stabilized_at, 4U);
  EXPECT_EQ(t.reach, letters(7, "abcdef"));
  EXPECT_EQ(t.unreached, letters(7, "g"));
}

TEST(Spread, SpecialAuras) {
  auto d = fixtures::space("discrete_aura");
  auto t = spread_trace(d, letters(3, "ab"));
  EXPECT_EQ(t.reach, letters(3, "ab"));
  EXPECT_EQ(t.stabilized_at, 0U);
  auto all = spread_trace(fixtures::space("trivial_on_discrete"), letters(3, "b"));
  EXPECT_TRUE(all.reach.is_full());
  EXPECT_EQ(all.stabilized_at, 1U);
}

TEST(Spread, Quarantine) {
  auto s = fixtures::space("epidemic_seven");
  auto q = apply_quarantine(s, letters(7, "b"));
  EXPECT_EQ(q.aura(1), letters(7, "b"));
  auto t = spread_trace(q, letters(7, "a"));
  EXPECT_EQ(t.reach, letters(7, "ab"));
  EXPECT_EQ(apply_quarantine(s, PointSet(7)), s);
  auto basic = fixtures::space("finite_aura_basic");
  try {
    apply_quarantine(basic, letters(4, "c"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition);
  }
}

TEST(Spread, Distancing) {
  auto coarse = fixtures::space("medical");
  auto fine = apply_distancing(coarse, fixtures::space("medical_refined").scope());
  EXPECT_EQ(fine, fixtures::space("medical_refined"));
  EXPECT_EQ(apply_distancing(coarse, coarse.scope()), coarse);
  auto medical_refined = fixtures::space("medical_refined");
  try {
    apply_distancing(medical_refined, coarse.scope());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_a_refinement);
  }
  auto bad = coarse.scope();
  bad.assignment[0] = PointSet::singleton(6, 1);
  EXPECT_THROW(apply_distancing(coarse, bad), Error);
}

TEST(Spread, Components) {
  auto c = spread_components(fixtures::space("epidemic_seven"));
  ASSERT_FALSE(c.components.empty());
  EXPECT_EQ(c.components.front().reach, letters(7, "abcdef"));
  EXPECT_EQ(c.components.back().reach, letters(7, "g"));
  EXPECT_EQ(c.components.back().generators, letters(7, "g"));
  EXPECT_TRUE(c.overlapping);

  auto trivial = spread_components(fixtures::space("trivial_on_discrete"));
  ASSERT_EQ(trivial.components.size(), 1U);
  EXPECT_TRUE(trivial.components[0].reach.is_full());
  EXPECT_TRUE(trivial.components[0].generators.is_full());

  auto discrete = spread_components(fixtures::space("discrete_aura"));
  ASSERT_EQ(discrete.components.size(), 3U);
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(discrete.components[x].reach, PointSet::singleton(3, x));
  EXPECT_FALSE(discrete.overlapping);
}

// A transitive scope can still leave a reach set that aura closure enlarges:
// y's aura contains x but not the other way round.
TEST(Spread, TransitiveReachNeedNotBeClosed) {
  AuraSpace s(Topology::discrete(2), ScopeFunction{{PointSet::of(2, {0}), PointSet::of(2, {0, 1})}});
  EXPECT_TRUE(scope_profile(s).transitive);
  auto reach = total_spread(s, PointSet::of(2, {0}));
  EXPECT_EQ(reach, PointSet::of(2, {0}));
  EXPECT_TRUE(is_aura_open(s, reach));
  EXPECT_NE(aura_closure(s, reach), reach);
}
