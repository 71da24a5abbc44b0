#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "aura/aura_space.hpp"
#include "aura/error.hpp"
#include "aura/morphisms.hpp"
#include "aura/point_set.hpp"
#include "aura/topology.hpp"

namespace aura::gen {

/// Engine for one case, derived only from (seed, case index).
inline std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline PointSet random_subset(std::mt19937_64& rng, std::size_t n) {
  PointSet s(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (rng() & 1U) s.insert(x);
  }
  return s;
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  return items.at(uniform(rng, 0, items.size() - 1));
}

inline Topology random_topology(std::mt19937_64& rng, std::size_t n) {
  Family subbasis;
  const auto k = uniform(rng, 0, n);
  for (std::size_t i = 0; i < k; ++i) subbasis.push_back(random_subset(rng, n));
  return topology_from_subbasis(n, subbasis);
}

/// Uniform choice of aura among the opens containing each point.
inline ScopeFunction random_scope(std::mt19937_64& rng, const Topology& t) {
  const auto opens = t.opens();
  ScopeFunction s;
  for (std::size_t x = 0; x < t.size(); ++x) {
    Family around;
    for (const auto& o : opens) {
      if (o.contains(x)) around.push_back(o);
    }
    s.assignment.push_back(pick(rng, around));
  }
  return s;
}

inline AuraSpace random_space(std::mt19937_64& rng, std::size_t n) {
  auto t = random_topology(rng, n);
  auto s = random_scope(rng, t);
  return AuraSpace(std::move(t), std::move(s));
}

/// Each aura is the smallest open around its point; always transitive.
inline AuraSpace random_minimal_space(std::mt19937_64& rng, std::size_t n) {
  auto t = random_topology(rng, n);
  ScopeFunction s;
  for (std::size_t x = 0; x < n; ++x) s.assignment.push_back(t.neighbourhood(x));
  return AuraSpace(std::move(t), std::move(s));
}

/// Partition topology whose blocks are the auras; symmetric and transitive.
inline AuraSpace random_partition_space(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> block(n);
  std::size_t blocks = 0;
  for (std::size_t x = 0; x < n; ++x) {
    block[x] = uniform(rng, 0, blocks);
    if (block[x] == blocks) ++blocks;
  }
  Family parts(blocks, PointSet(n));
  for (std::size_t x = 0; x < n; ++x) parts[block[x]].insert(x);
  Family opens;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << blocks); ++m) {
    PointSet u(n);
    for (std::size_t b = 0; b < blocks; ++b) {
      if (m >> b & 1U) u |= parts[b];
    }
    opens.push_back(std::move(u));
  }
  ScopeFunction s;
  for (std::size_t x = 0; x < n; ++x) s.assignment.push_back(parts[block[x]]);
  return AuraSpace(Topology(n, std::move(opens)), std::move(s));
}

/// The space for case `index`: most cases use the uniform-aura generator;
/// every fifth case is a minimal-neighbourhood space and every fifth (offset)
/// a partition space, so the transitive and symmetric laws see inputs.
inline AuraSpace case_space(std::uint64_t seed, std::uint64_t index, std::size_t max_n) {
  if (max_n < 1) throw Error(ErrorCode::precondition, "max_n must be positive");
  auto rng = case_rng(seed, index);
  const auto n = uniform(rng, std::min<std::size_t>(2, max_n), max_n);
  switch (index % 5) {
    case 3: return random_minimal_space(rng, n);
    case 4: return random_partition_space(rng, n);
    default: return random_space(rng, n);
  }
}

inline SpaceMap random_map(std::mt19937_64& rng, const AuraSpace& source, const AuraSpace& target) {
  SpaceMap m{source, target, {}};
  for (std::size_t x = 0; x < source.size(); ++x) m.mapping.push_back(uniform(rng, 0, target.size() - 1));
  return m;
}

/// Shrinks each aura to a uniformly chosen open between {x} and a(x).
inline AuraSpace random_refinement(std::mt19937_64& rng, const AuraSpace& s) {
  const auto opens = s.topology().opens();
  ScopeFunction fine;
  for (std::size_t x = 0; x < s.size(); ++x) {
    Family inside;
    for (const auto& o : opens) {
      if (o.contains(x) && o.subset_of(s.aura(x))) inside.push_back(o);
    }
    fine.assignment.push_back(pick(rng, inside));
  }
  return s.with_scope(std::move(fine));
}

/// Random subset of the points whose singletons are open.
inline PointSet random_quarantine(std::mt19937_64& rng, const AuraSpace& s) {
  PointSet q(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.topology().is_open(PointSet::singleton(s.size(), x)) && (rng() & 1U)) q.insert(x);
  }
  return q;
}

}  // namespace aura::gen
