#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aura/aura_space.hpp"
#include "aura/error.hpp"
#include "aura/open_classes.hpp"
#include "aura/point_set.hpp"
#include "aura/validation.hpp"

namespace aura {

/// A function between the point sets of two aura spaces.
struct SpaceMap {
  AuraSpace source;
  AuraSpace target;
  std::vector<std::size_t> mapping;

  static SpaceMap identity(const AuraSpace& s) {
    SpaceMap m{s, s, {}};
    for (std::size_t x = 0; x < s.size(); ++x) m.mapping.push_back(x);
    return m;
  }

  static SpaceMap constant(const AuraSpace& source, const AuraSpace& target, std::size_t value) {
    return {source, target, std::vector<std::size_t>(source.size(), value)};
  }
};

inline ValidationResult validate_map(const SpaceMap& m) {
  ValidationResult result;
  if (m.mapping.size() != m.source.size()) {
    result.add("length", "mapping has " + std::to_string(m.mapping.size()) + " entries for " +
                             std::to_string(m.source.size()) + " source points");
  }
  for (std::size_t x = 0; x < m.mapping.size(); ++x) {
    if (m.mapping[x] >= m.target.size()) {
      result.add("range", "point " + std::to_string(x) + " maps to " + std::to_string(m.mapping[x]) +
                              ", outside a target of " + std::to_string(m.target.size()) + " points",
                 x);
    }
  }
  return result;
}

inline void require_valid_map(const SpaceMap& m) {
  auto check = validate_map(m);
  if (!check.ok()) throw Error(ErrorCode::invalid_map, "invalid map: " + check.violations.front().message);
}

inline PointSet preimage(const SpaceMap& m, const PointSet& v) {
  m.target.topology().check_universe(v);
  require_valid_map(m);
  PointSet out(m.source.size());
  for (std::size_t x = 0; x < m.mapping.size(); ++x) {
    if (v.contains(m.mapping[x])) out.insert(x);
  }
  return out;
}

inline PointSet image(const SpaceMap& m, const PointSet& u) {
  m.source.topology().check_universe(u);
  require_valid_map(m);
  PointSet out(m.target.size());
  u.for_each([&](std::size_t x) { out.insert(m.mapping[x]); });
  return out;
}

struct ContinuityProfile {
  bool continuous = true;    // preimages of opens are open
  bool a_continuous = true;  // preimages of aura-opens are aura-open
  bool a_semi = true;
  bool a_pre = true;
  bool a_alpha = true;
  bool a_beta = true;
};

/// The aura-continuity flag quantifies over the target's aura topology; the
/// classical flag and the four generalized flags quantify over the target's
/// full topology.
inline ContinuityProfile continuity_profile(const SpaceMap& m) {
  require_valid_map(m);
  require_enumerable(m.source.size(), kMaxEnumerableUniverse, "continuity_profile");
  require_enumerable(m.target.size(), kMaxEnumerableUniverse, "continuity_profile");

  ContinuityProfile p;
  for (const auto& v : aura_topology(m.target).opens()) {
    if (!is_aura_open(m.source, preimage(m, v))) {
      p.a_continuous = false;
      break;
    }
  }
  for (const auto& v : m.target.topology().opens()) {
    const auto u = preimage(m, v);
    const auto c = classify_set(m.source, u);
    p.continuous = p.continuous && c[OpenClass::open];
    p.a_semi = p.a_semi && c[OpenClass::a_semi_open];
    p.a_pre = p.a_pre && c[OpenClass::a_pre_open];
    p.a_alpha = p.a_alpha && c[OpenClass::a_alpha_open];
    p.a_beta = p.a_beta && c[OpenClass::a_beta_open];
  }
  return p;
}

/// Semi-continuity read through closed sets: every closed preimage is the
/// complement of an aura-semi-open set.
inline bool semi_continuity_via_closed(const SpaceMap& m) {
  require_valid_map(m);
  for (const auto& f : closed_sets(m.target.topology())) {
    if (!in_class(m.source, preimage(m, f).complement(), OpenClass::a_semi_open)) return false;
  }
  return true;
}

/// Semi-continuity read pointwise: every x and open V around f(x) admit an
/// aura-semi-open U around x with f(U) inside V.
inline bool semi_continuity_via_neighbourhoods(const SpaceMap& m) {
  require_valid_map(m);
  const auto semi = enumerate_class(m.source, OpenClass::a_semi_open);
  const auto opens = m.target.topology().opens();
  for (std::size_t x = 0; x < m.source.size(); ++x) {
    for (const auto& v : opens) {
      if (!v.contains(m.mapping[x])) continue;
      bool found = false;
      for (const auto& u : semi) {
        if (u.contains(x) && image(m, u).subset_of(v)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

/// g after f. Requires f's target to be g's source.
inline SpaceMap compose(const SpaceMap& f, const SpaceMap& g) {
  require_valid_map(f);
  require_valid_map(g);
  if (!(f.target == g.source)) {
    throw Error(ErrorCode::space_mismatch, "compose: the first map's target is not the second map's source");
  }
  SpaceMap out{f.source, g.target, {}};
  out.mapping.reserve(f.mapping.size());
  for (auto y : f.mapping) out.mapping.push_back(g.mapping[y]);
  return out;
}

}  // namespace aura
