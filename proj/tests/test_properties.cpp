#include <gtest/gtest.h>

#include "support.hpp"

using namespace aura;

TEST(Generators, Deterministic) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    EXPECT_EQ(gen::case_space(5, i, 6), gen::case_space(5, i, 6));
  }
  auto a = gen::case_rng(1, 2);
  auto b = gen::case_rng(1, 3);
  EXPECT_NE(a(), b());
}

TEST(Generators, ShapesAndKinds) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto s = gen::case_space(9, i, 6);
    EXPECT_GE(s.size(), 2U);
    EXPECT_LE(s.size(), 6U);
    EXPECT_TRUE(validate_topology(s.topology()).ok());
    const auto p = scope_profile(s);
    if (i % 5 == 3) {
      EXPECT_TRUE(p.transitive);
    }
    if (i % 5 == 4) {
      EXPECT_TRUE(p.transitive && p.symmetric);
    }
  }
}

TEST(Generators, RefinementAndQuarantine) {
  auto rng = gen::case_rng(3, 0);
  for (int i = 0; i < 50; ++i) {
    auto s = gen::random_space(rng, 5);
    EXPECT_TRUE(is_refinement(s, gen::random_refinement(rng, s)));
    auto q = gen::random_quarantine(rng, s);
    EXPECT_NO_THROW(apply_quarantine(s, q));
  }
}

TEST(Properties, SuitePassesAndIsDeterministic) {
  auto a = props::run_property_suite(42, 120, 5);
  auto b = props::run_property_suite(42, 120, 5);
  ASSERT_EQ(a.properties.size(), b.properties.size());
  for (std::size_t i = 0; i < a.properties.size(); ++i) {
    const auto& p = a.properties[i];
    EXPECT_EQ(p.failed, 0U) << p.name << ": " << (p.first_failure ? p.first_failure->detail : "");
    EXPECT_GT(p.checked, 0U) << p.name;
    EXPECT_EQ(p.checked, b.properties[i].checked);
  }
}

TEST(Properties, RejectsBadArguments) {
  EXPECT_THROW(props::run_property_suite(1, 10, props::kMaxFuzzUniverse + 1), Error);
  EXPECT_THROW(props::run_property_suite(1, 0, 4), Error);
}
