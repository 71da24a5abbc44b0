#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "aura/aura_space.hpp"
#include "aura/error.hpp"
#include "aura/point_set.hpp"
#include "aura/topology.hpp"

namespace aura {

using PointPair = std::pair<std::size_t, std::size_t>;

struct PointClosedPair {
  std::size_t point;
  PointSet closed;
};

struct SeparationProfile {
  bool a_t0 = true;
  bool a_t1 = true;
  bool a_t2 = true;
  bool a_regular = true;
  bool t0 = true;
  bool t1 = true;
  bool t2 = true;

  std::optional<PointPair> a_t0_witness;
  std::optional<PointPair> a_t1_witness;
  std::optional<PointPair> a_t2_witness;
  std::optional<PointClosedPair> a_regular_witness;
  std::optional<PointPair> t0_witness;
  std::optional<PointPair> t1_witness;
  std::optional<PointPair> t2_witness;
};

inline constexpr std::size_t kMaxSeparationUniverse = 12;

namespace detail {

struct PairAxioms {
  bool t0 = true, t1 = true, t2 = true;
  std::optional<PointPair> t0_witness, t1_witness, t2_witness;
};

/// Smallest member of `opens` containing each point.
inline std::vector<PointSet> minimal_members(std::size_t n, const Family& opens) {
  std::vector<PointSet> nbhd(n, PointSet::full(n));
  for (const auto& o : opens) o.for_each([&](std::size_t x) { nbhd[x] &= o; });
  return nbhd;
}

// Any open set containing x contains nbhd[x], so the minimal members decide
// every separation question: one-sided (T0), two-sided (T1) or disjoint (T2).
inline PairAxioms pair_axioms(std::size_t n, const std::vector<PointSet>& nbhd) {
  PairAxioms r;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const bool x_without_y = !nbhd[x].contains(y);
      const bool y_without_x = !nbhd[y].contains(x);
      if (!(x_without_y || y_without_x) && r.t0) {
        r.t0 = false;
        r.t0_witness = PointPair{x, y};
      }
      if (!(x_without_y && y_without_x) && r.t1) {
        r.t1 = false;
        r.t1_witness = PointPair{x, y};
      }
      if (nbhd[x].intersects(nbhd[y]) && r.t2) {
        r.t2 = false;
        r.t2_witness = PointPair{x, y};
      }
    }
  }
  return r;
}

}  // namespace detail

/// Separation axioms of the aura topology and of the underlying topology,
/// decided by exhaustive search over the materialized open families.
/// Witnesses are the lexicographically first failing pair; for regularity,
/// the first closed set in numeric order, then the smallest point outside it.
inline SeparationProfile separation_profile(const AuraSpace& s) {
  require_enumerable(s.size(), kMaxSeparationUniverse, "separation_profile");
  const auto n = s.size();
  const auto aura_opens = aura_topology(s).opens();
  const auto aura_nbhd = detail::minimal_members(n, aura_opens);
  const auto classical_nbhd = detail::minimal_members(n, s.topology().opens());

  SeparationProfile p;
  const auto a = detail::pair_axioms(n, aura_nbhd);
  p.a_t0 = a.t0;
  p.a_t1 = a.t1;
  p.a_t2 = a.t2;
  p.a_t0_witness = a.t0_witness;
  p.a_t1_witness = a.t1_witness;
  p.a_t2_witness = a.t2_witness;

  const auto c = detail::pair_axioms(n, classical_nbhd);
  p.t0 = c.t0;
  p.t1 = c.t1;
  p.t2 = c.t2;
  p.t0_witness = c.t0_witness;
  p.t1_witness = c.t1_witness;
  p.t2_witness = c.t2_witness;

  // The smallest aura-open set around F is the union of its points' minimal members.
  Family closed_family;
  for (const auto& open : aura_opens) closed_family.push_back(open.complement());
  std::sort(closed_family.begin(), closed_family.end());
  for (const auto& closed : closed_family) {
    PointSet around(n);
    closed.for_each([&](std::size_t y) { around |= aura_nbhd[y]; });
    for (std::size_t x = 0; x < n && p.a_regular; ++x) {
      if (closed.contains(x)) continue;
      if (aura_nbhd[x].intersects(around)) {
        p.a_regular = false;
        p.a_regular_witness = PointClosedPair{x, closed};
      }
    }
    if (!p.a_regular) break;
  }
  return p;
}

struct SingletonClosureReport {
  bool all_closed = true;
  std::vector<bool> per_point;  // X \ {x} is aura-open
};

inline SingletonClosureReport t1_via_singletons(const AuraSpace& s) {
  require_enumerable(s.size(), kMaxEnumerableUniverse, "t1_via_singletons");
  SingletonClosureReport r;
  for (std::size_t x = 0; x < s.size(); ++x) {
    const bool closed = is_aura_open(s, PointSet::singleton(s.size(), x).complement());
    r.per_point.push_back(closed);
    r.all_closed = r.all_closed && closed;
  }
  return r;
}

}  // namespace aura
