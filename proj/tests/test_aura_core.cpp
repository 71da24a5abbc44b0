#include <gtest/gtest.h>

#include "support.hpp"

using namespace aura;
using aura::test::family;
using aura::test::letters;

namespace {

// A is aura-open when every member's aura stays inside A.
bool aura_open_oracle(const AuraSpace& s, const PointSet& a) {
  for (auto x : a.indices()) {
    if (!s.aura(x).subset_of(a)) return false;
  }
  return true;
}

PointSet fixpoint_oracle(const AuraSpace& s, PointSet a) {
  for (std::size_t k = 0; k <= s.size(); ++k) a = aura_closure(s, a);
  return a;
}

}  // namespace

TEST(AuraCore, FiniteBasicAuraTopology) {
  auto s = fixtures::space("finite_aura_basic");
  EXPECT_EQ(aura_topology(s).opens(), family(4, {"", "a", "ab", "abc", "abcd"}));
}

TEST(AuraCore, NonIdempotentTrace) {
  auto s = fixtures::space("non_idempotent");
  auto c = letters(3, "c");
  EXPECT_EQ(aura_closure(s, c), letters(3, "bc"));
  EXPECT_EQ(iterate_closure(s, c, 2), PointSet::full(3));
  auto tr = closure_trace(s, c);
  EXPECT_EQ(tr.stabilized_at, 2U);
  ASSERT_EQ(tr.stages.size(), 3U);
  EXPECT_EQ(tr.stages[0], c);
  EXPECT_EQ(infinity_closure(s, c), PointSet::full(3));
}

TEST(AuraCore, ClosureComparisonFixtures) {
  auto same = fixtures::space("closure_coincide");
  auto b = letters(3, "b");
  EXPECT_EQ(aura_closure(same, b), closure(same.topology(), b));
  auto strict = fixtures::space("closure_strict");
  EXPECT_EQ(closure(strict.topology(), b), b);
  EXPECT_EQ(aura_closure(strict, b), letters(3, "ab"));
}

TEST(AuraCore, InteriorIsDualOfClosure) {
  for (auto name : fixtures::names(fixtures::Kind::space)) {
    auto s = fixtures::space(name);
    for_each_subset(s.size(), [&](PointSet a) {
      EXPECT_EQ(aura_interior(s, a), aura_closure(s, a.complement()).complement()) << name;
    });
  }
}

TEST(AuraCore, TopologiesMatchOracle) {
  for (auto name : fixtures::names(fixtures::Kind::space)) {
    auto s = fixtures::space(name);
    Family expected;
    Family expected_inf;
    for_each_subset(s.size(), [&](PointSet a) {
      if (aura_open_oracle(s, a)) expected.push_back(a);
      if (fixpoint_oracle(s, a.complement()) == a.complement()) expected_inf.push_back(a);
    });
    EXPECT_EQ(aura_topology(s).opens(), expected) << name;
    EXPECT_EQ(infinity_topology(s).opens(), expected_inf) << name;
    EXPECT_TRUE(validate_topology(aura_topology(s)).ok()) << name;
  }
}

TEST(AuraCore, ScopeProfiles) {
  auto p = scope_profile(fixtures::space("discrete_aura"));
  EXPECT_TRUE(p.discrete && p.transitive && p.symmetric);
  EXPECT_FALSE(p.trivial);
  auto q = scope_profile(fixtures::space("trivial_on_discrete"));
  EXPECT_TRUE(q.trivial && q.transitive && q.symmetric);
  EXPECT_FALSE(q.discrete);
  auto e = scope_profile(fixtures::space("epidemic_seven"));
  EXPECT_FALSE(e.symmetric);
  EXPECT_FALSE(e.transitive);
  EXPECT_TRUE(scope_profile(fixtures::space("finite_aura_basic")).transitive);
}

TEST(AuraCore, ScopeValidation) {
  auto t = Topology(3, family(3, {"", "a", "ab", "abc"}));
  auto missing = validate_scope(t, ScopeFunction{family(3, {"a", "a", "abc"})});
  ASSERT_EQ(missing.violations.size(), 1U);
  EXPECT_EQ(missing.violations[0].rule, "self_membership");
  EXPECT_EQ(missing.violations[0].point, 1U);
  auto closed = validate_scope(t, ScopeFunction{family(3, {"a", "ab", "bc"})});
  ASSERT_EQ(closed.violations.size(), 1U);
  EXPECT_EQ(closed.violations[0].rule, "open_codomain");
  try {
    AuraSpace(t, ScopeFunction{family(3, {"a", "a", "abc"})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_scope);
  }
  EXPECT_THROW(validate_scope(t, ScopeFunction{family(3, {"a"})}), Error);
}

TEST(AuraCore, UniverseMismatchThrows) {
  auto s = fixtures::space("finite_aura_basic");
  EXPECT_THROW(aura_closure(s, PointSet(3)), Error);
  EXPECT_THROW(closure_trace(s, PointSet(5)), Error);
}
