#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aura/aura_space.hpp"
#include "aura/error.hpp"
#include "aura/point_set.hpp"

namespace aura {

/// One forward transmission step: the union of the auras of A's members.
inline PointSet spread_step(const AuraSpace& s, const PointSet& a) {
  s.topology().check_universe(a);
  PointSet out(s.size());
  a.for_each([&](std::size_t x) { out |= s.aura(x); });
  return out;
}

struct SpreadTrace {
  std::vector<PointSet> stages;  // A0, S(A0), ... up to the first fixpoint
  std::size_t stabilized_at = 0;
  PointSet reach;
  PointSet unreached;
};

inline SpreadTrace spread_trace(const AuraSpace& s, const PointSet& seed) {
  s.topology().check_universe(seed);
  SpreadTrace t;
  t.stages.push_back(seed);
  while (true) {
    auto next = spread_step(s, t.stages.back());
    if (next == t.stages.back()) break;
    t.stages.push_back(std::move(next));
  }
  t.stabilized_at = t.stages.size() - 1;
  t.reach = t.stages.back();
  t.unreached = t.reach.complement();
  return t;
}

inline PointSet total_spread(const AuraSpace& s, const PointSet& seed) { return spread_trace(s, seed).reach; }

/// Isolates every point of Q: its aura becomes {x}. Each {x} must already be
/// open, otherwise the modified assignment would leave the topology.
inline AuraSpace apply_quarantine(const AuraSpace& s, const PointSet& q) {
  s.topology().check_universe(q);
  auto scope = s.scope();
  q.for_each([&](std::size_t x) {
    auto single = PointSet::singleton(s.size(), x);
    if (!s.topology().is_open(single)) {
      throw Error(ErrorCode::precondition,
                  "cannot quarantine point " + std::to_string(x) + ": its singleton is not open");
    }
    scope.assignment[x] = std::move(single);
  });
  return s.with_scope(std::move(scope));
}

/// Swaps in a smaller scope function; every new aura must sit inside the old one.
inline AuraSpace apply_distancing(const AuraSpace& s, const ScopeFunction& replacement) {
  auto check = validate_scope(s.topology(), replacement);
  if (!check.ok()) {
    throw Error(ErrorCode::invalid_scope, "distancing scope is invalid: " + check.violations.front().message);
  }
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (!replacement[x].subset_of(s.aura(x))) {
      throw Error(ErrorCode::not_a_refinement,
                  "distancing would enlarge the aura of point " + std::to_string(x));
    }
  }
  return s.with_scope(replacement);
}

struct SpreadComponent {
  PointSet reach;
  PointSet generators;  // points whose total spread is exactly `reach`
};

struct SpreadComponents {
  std::vector<SpreadComponent> components;  // ordered by first generator
  bool overlapping = false;                 // some pair of distinct reaches intersects
};

/// Distinct total-spread sets of single points. These form a partition only
/// in special cases; overlap is reported, never hidden.
inline SpreadComponents spread_components(const AuraSpace& s) {
  require_enumerable(s.size(), 64, "spread_components");
  SpreadComponents out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    auto reach = total_spread(s, PointSet::singleton(s.size(), x));
    bool merged = false;
    for (auto& c : out.components) {
      if (c.reach == reach) {
        c.generators.insert(x);
        merged = true;
        break;
      }
    }
    if (!merged) out.components.push_back({std::move(reach), PointSet::singleton(s.size(), x)});
  }
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    for (std::size_t j = i + 1; j < out.components.size(); ++j) {
      if (out.components[i].reach.intersects(out.components[j].reach)) out.overlapping = true;
    }
  }
  return out;
}

}  // namespace aura
