#include <gtest/gtest.h>

#include <optional>

#include "support.hpp"

using namespace aura;
using namespace aura::sensor;

namespace {

// Grid of the three-sensor fixture in half-unit integer coordinates, so disk
// membership and nearest-sensor ties are decided exactly.
struct HalfUnitOracle {
  static constexpr int cols = 23, rows = 21;
  struct S { int x, y, r; };
  std::vector<S> sensors{{0, 0, 6}, {8, 0, 4}, {4, 6, 4}};

  static int hx(std::size_t p) { return static_cast<int>(p % cols) - 8; }
  static int hy(std::size_t p) { return static_cast<int>(p / cols) - 8; }
  static int d2(int ax, int ay, int bx, int by) { return (ax - bx) * (ax - bx) + (ay - by) * (ay - by); }

  std::optional<std::size_t> owner(std::size_t p) const {
    std::optional<std::size_t> best;
    int best_d = 0;
    for (std::size_t i = 0; i < sensors.size(); ++i) {
      const int d = d2(hx(p), hy(p), sensors[i].x, sensors[i].y);
      if (d >= sensors[i].r * sensors[i].r) continue;
      if (!best || d < best_d) {
        best = i;
        best_d = d;
      }
    }
    return best;
  }

  PointSet aura(std::size_t p) const {
    const std::size_t n = cols * rows;
    auto o = owner(p);
    if (!o) return PointSet::singleton(n, p);
    PointSet out(n);
    const auto& s = sensors[*o];
    for (std::size_t q = 0; q < n; ++q) {
      if (d2(hx(q), hy(q), s.x, s.y) < s.r * s.r) out.insert(q);
    }
    return out;
  }
};

SensorDeployment empty_field() {
  SensorDeployment d;
  d.region = {0, 0, 3, 2};
  d.resolution = 1;
  return d;
}

}  // namespace

TEST(Sensor, GridShapeAndLabels) {
  auto g = build_grid_space(fixtures::deployment("sensor_three"));
  EXPECT_EQ(g.columns, 23U);
  EXPECT_EQ(g.rows, 21U);
  EXPECT_EQ(g.size(), 483U);
  EXPECT_EQ(g.aura_space.label(24), "g24");
  EXPECT_DOUBLE_EQ(g.coordinates[24].x, -3.5);
  EXPECT_DOUBLE_EQ(g.coordinates[24].y, -3.5);
  EXPECT_TRUE(g.aura_space.topology().is_predicate_form());
}

TEST(Sensor, AurasMatchHalfUnitOracle) {
  auto g = build_grid_space(fixtures::deployment("sensor_three"));
  HalfUnitOracle o;
  for (std::size_t p = 0; p < g.size(); ++p) {
    EXPECT_EQ(g.owner[p], o.owner(p)) << p;
    EXPECT_EQ(g.aura_space.aura(p), o.aura(p)) << p;
    EXPECT_TRUE(g.aura_space.aura(p).contains(p));
  }
}

TEST(Sensor, TargetBoxCoverage) {
  auto g = build_grid_space(fixtures::deployment("sensor_three"));
  auto target = grid_points_in(g, {1, 0, 3, 2});
  EXPECT_EQ(target.size(), 25U);
  auto r = coverage_report(g, target);
  EXPECT_TRUE(r.approximation.lower.empty());
  EXPECT_TRUE(target.subset_of(r.approximation.upper));
  EXPECT_NE(r.approximation.upper, target);
  EXPECT_FALSE(r.full_coverage);
  EXPECT_FALSE(r.target_aura_open);
}

TEST(Sensor, SingleSensorCoveringEverything) {
  SensorDeployment d = empty_field();
  d.sensors = {{{1.5, 1}, 10}};
  auto g = build_grid_space(d);
  for (std::size_t p = 0; p < g.size(); ++p) EXPECT_TRUE(g.aura_space.aura(p).is_full());
}

TEST(Sensor, NoSensors) {
  auto g = build_grid_space(empty_field());
  EXPECT_EQ(g.size(), 12U);
  auto target = grid_points_in(g, {1, 0, 2, 1});
  auto r = coverage_report(g, target);
  EXPECT_EQ(r.approximation.lower, target);
  EXPECT_TRUE(r.full_coverage);
  for (std::size_t steps : {0U, 1U, 5U}) EXPECT_EQ(relay_reach(g, target, steps), target);
}

TEST(Sensor, DeltaBallForUncoveredPoints) {
  SensorDeployment d = empty_field();
  d.uncovered = {UncoveredAura::Mode::delta_ball, 1.5};
  auto g = build_grid_space(d);
  // corner (0,0) sees (1,0), (0,1) and (1,1) within 1.5
  EXPECT_EQ(g.aura_space.aura(0).indices(), (std::vector<std::size_t>{0, 1, 4, 5}));
}

TEST(Sensor, RelayReach) {
  auto g = build_grid_space(fixtures::deployment("sensor_three"));
  auto src = grid_points_in(g, {0.5, 0.5, 0.5, 0.5});
  ASSERT_EQ(src.size(), 1U);
  EXPECT_EQ(relay_reach(g, src, 0), src);
  EXPECT_EQ(relay_reach(g, src, g.size()), closure_trace(g.aura_space, src).limit());
}

TEST(Sensor, Validation) {
  auto d = fixtures::deployment("sensor_three");
  auto bad = d;
  bad.resolution = 0;
  EXPECT_THROW(build_grid_space(bad), Error);
  bad = d;
  bad.sensors[0].range = -1;
  EXPECT_THROW(build_grid_space(bad), Error);
  bad = d;
  bad.region = {1, 1, 0, 0};
  EXPECT_THROW(build_grid_space(bad), Error);
  bad = d;
  bad.region.x1 = std::numeric_limits<double>::infinity();
  EXPECT_THROW(build_grid_space(bad), Error);
  bad = empty_field();
  bad.uncovered = {UncoveredAura::Mode::delta_ball, 0};
  EXPECT_THROW(build_grid_space(bad), Error);
}

TEST(Sensor, CompareDeployments) {
  auto d = fixtures::deployment("sensor_three");
  auto before = build_grid_space(d);
  auto shrunk = d;
  for (auto& s : shrunk.sensors) s.range -= 0.5;
  auto after = build_grid_space(shrunk);
  auto target = grid_points_in(before, {1, 0, 3, 2});
  auto c = compare_deployments(before, after, target);
  EXPECT_EQ(c.before.upper, coverage_report(before, target).approximation.upper);
  if (c.pointwise_refinement) {
    ASSERT_TRUE(c.refinement.has_value());
    EXPECT_TRUE(c.refinement->lower_grows && c.refinement->upper_shrinks);
  }
  EXPECT_THROW(compare_deployments(before, build_grid_space(empty_field()), target), Error);
}
