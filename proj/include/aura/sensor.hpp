#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aura/aura_space.hpp"
#include "aura/error.hpp"
#include "aura/point_set.hpp"
#include "aura/rough_approx.hpp"
#include "aura/topology.hpp"

namespace aura::sensor {

struct Point2 {
  double x = 0;
  double y = 0;
};

struct Sensor {
  Point2 position;
  double range = 0;  // open disk radius
};

/// Axis-aligned closed rectangle [x0, x1] x [y0, y1].
struct Rect {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

/// What a grid point covered by no sensor gets as its aura.
struct UncoveredAura {
  enum class Mode { self, delta_ball } mode = Mode::self;
  double delta = 0;  // radius of the open ball for delta_ball
};

struct SensorDeployment {
  std::vector<Sensor> sensors;
  Rect region;
  double resolution = 1.0;
  UncoveredAura uncovered;
};

struct GridSpace {
  AuraSpace aura_space;
  std::vector<Point2> coordinates;
  std::vector<std::optional<std::size_t>> owner;  // responsible sensor, if any
  std::size_t columns = 0;
  std::size_t rows = 0;

  [[nodiscard]] std::size_t size() const noexcept { return coordinates.size(); }
};

namespace detail {

inline double squared_distance(Point2 a, Point2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline bool inside_open_disk(Point2 centre, double radius, Point2 p) {
  return squared_distance(centre, p) < radius * radius;
}

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorCode::precondition, std::string("non-finite ") + what);
}

// Grid steps along one axis, counting both ends of the closed interval.
inline std::size_t axis_count(double lo, double hi, double step) {
  if (hi < lo) return 0;
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

}  // namespace detail

inline void validate_deployment(const SensorDeployment& d) {
  detail::require_finite(d.resolution, "resolution");
  if (d.resolution <= 0) throw Error(ErrorCode::precondition, "resolution must be positive");
  for (double v : {d.region.x0, d.region.y0, d.region.x1, d.region.y1}) detail::require_finite(v, "region bound");
  if (d.region.x1 < d.region.x0 || d.region.y1 < d.region.y0) {
    throw Error(ErrorCode::precondition, "region is empty");
  }
  for (const auto& s : d.sensors) {
    detail::require_finite(s.position.x, "sensor coordinate");
    detail::require_finite(s.position.y, "sensor coordinate");
    detail::require_finite(s.range, "sensor range");
    if (s.range <= 0) throw Error(ErrorCode::precondition, "sensor range must be positive");
  }
  if (d.uncovered.mode == UncoveredAura::Mode::delta_ball) {
    detail::require_finite(d.uncovered.delta, "delta");
    if (d.uncovered.delta <= 0) throw Error(ErrorCode::precondition, "delta must be positive");
  }
}

/// Discretizes the region row by row (y outer, x inner) and gives every grid
/// point the grid trace of its responsible sensor's open disk. The responsible
/// sensor is the nearest one whose disk contains the point, ties to the lower
/// index. The topology is discrete and never materialized.
inline GridSpace build_grid_space(const SensorDeployment& d) {
  validate_deployment(d);
  GridSpace g;
  g.columns = detail::axis_count(d.region.x0, d.region.x1, d.resolution);
  g.rows = detail::axis_count(d.region.y0, d.region.y1, d.resolution);
  const std::size_t n = g.columns * g.rows;
  if (n == 0) throw Error(ErrorCode::empty_universe, "deployment yields no grid points");

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t r = 0; r < g.rows; ++r) {
    for (std::size_t c = 0; c < g.columns; ++c) {
      g.coordinates.push_back({d.region.x0 + static_cast<double>(c) * d.resolution,
                               d.region.y0 + static_cast<double>(r) * d.resolution});
      labels.push_back("g" + std::to_string(labels.size()));
    }
  }

  std::vector<PointSet> disk_trace;
  for (const auto& s : d.sensors) {
    PointSet trace(n);
    for (std::size_t p = 0; p < n; ++p) {
      if (detail::inside_open_disk(s.position, s.range, g.coordinates[p])) trace.insert(p);
    }
    disk_trace.push_back(std::move(trace));
  }

  ScopeFunction scope;
  scope.assignment.reserve(n);
  g.owner.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::optional<std::size_t> best;
    double best_d2 = 0;
    for (std::size_t i = 0; i < d.sensors.size(); ++i) {
      if (!disk_trace[i].contains(p)) continue;
      const double d2 = detail::squared_distance(d.sensors[i].position, g.coordinates[p]);
      if (!best || d2 < best_d2) {
        best = i;
        best_d2 = d2;
      }
    }
    g.owner[p] = best;
    if (best) {
      scope.assignment.push_back(disk_trace[*best]);
    } else if (d.uncovered.mode == UncoveredAura::Mode::delta_ball) {
      PointSet ball(n);
      for (std::size_t q = 0; q < n; ++q) {
        if (detail::inside_open_disk(g.coordinates[p], d.uncovered.delta, g.coordinates[q])) ball.insert(q);
      }
      scope.assignment.push_back(std::move(ball));
    } else {
      scope.assignment.push_back(PointSet::singleton(n, p));
    }
  }
  g.aura_space = AuraSpace(Topology::discrete(n, std::move(labels)), std::move(scope));
  return g;
}

/// Grid points inside the closed rectangle (boundary included).
inline PointSet grid_points_in(const GridSpace& g, const Rect& r) {
  constexpr double eps = 1e-9;
  PointSet out(g.size());
  for (std::size_t p = 0; p < g.size(); ++p) {
    const auto& c = g.coordinates[p];
    if (c.x >= r.x0 - eps && c.x <= r.x1 + eps && c.y >= r.y0 - eps && c.y <= r.y1 + eps) out.insert(p);
  }
  return out;
}

struct CoverageReport {
  ApproximationReport approximation;
  bool full_coverage = false;  // lower approximation equals the target
  bool target_aura_open = false;
};

inline CoverageReport coverage_report(const GridSpace& g, const PointSet& target) {
  CoverageReport r{approximate(g.aura_space, target)};
  r.full_coverage = r.approximation.lower == target;
  r.target_aura_open = is_aura_open(g.aura_space, target);
  return r;
}

/// Points alerted after `steps` closure rounds starting from `source`.
inline PointSet relay_reach(const GridSpace& g, const PointSet& source, std::size_t steps) {
  return iterate_closure(g.aura_space, source, steps);
}

struct DeploymentComparison {
  ApproximationReport before;
  ApproximationReport after;
  bool pointwise_refinement = false;  // every new aura sits inside the old one
  std::optional<RefinementReport> refinement;
};

/// Compares two deployments over the same grid. Monotonicity is only claimed
/// (via a refinement report) when the new scope is pointwise inside the old.
inline DeploymentComparison compare_deployments(const GridSpace& before, const GridSpace& after,
                                                const PointSet& target) {
  if (before.size() != after.size() || before.columns != after.columns) {
    throw Error(ErrorCode::space_mismatch, "deployments were discretized onto different grids");
  }
  DeploymentComparison c{approximate(before.aura_space, target), approximate(after.aura_space, target), false, std::nullopt};
  c.pointwise_refinement = is_refinement(before.aura_space, after.aura_space);
  if (c.pointwise_refinement) c.refinement = refinement_report(before.aura_space, after.aura_space, target);
  return c;
}

}  // namespace aura::sensor
