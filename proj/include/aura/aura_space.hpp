#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "aura/error.hpp"
#include "aura/point_set.hpp"
#include "aura/topology.hpp"
#include "aura/validation.hpp"

namespace aura {

/// Assignment of one open neighbourhood (its "aura") to every point.
struct ScopeFunction {
  std::vector<PointSet> assignment;

  [[nodiscard]] std::size_t size() const noexcept { return assignment.size(); }
  [[nodiscard]] const PointSet& operator[](std::size_t x) const { return assignment.at(x); }

  friend bool operator==(const ScopeFunction&, const ScopeFunction&) = default;
};

/// Checks x in a(x) and a(x) open, reporting the first offending point first.
inline ValidationResult validate_scope(const Topology& t, const ScopeFunction& s) {
  if (s.size() != t.size()) {
    throw Error(ErrorCode::universe_mismatch, "scope assigns " + std::to_string(s.size()) +
                                                  " auras for " + std::to_string(t.size()) + " points");
  }
  ValidationResult result;
  for (std::size_t x = 0; x < s.size(); ++x) {
    const auto& a = s.assignment[x];
    if (a.universe() != t.size()) {
      result.add("universe", "aura of point " + std::to_string(x) + " lives in the wrong universe", x);
      continue;
    }
    if (!a.contains(x)) {
      result.add("self_membership", "point " + std::to_string(x) + " is not in its own aura " + a.to_string(), x);
    }
    if (!t.is_open(a)) {
      result.add("open_codomain", "aura " + a.to_string() + " of point " + std::to_string(x) + " is not an open set", x);
    }
  }
  return result;
}

/// A topology together with a valid scope function.
class AuraSpace {
public:
  AuraSpace() = default;

  AuraSpace(Topology topology, ScopeFunction scope)
      : topology_(std::move(topology)), scope_(std::move(scope)) {
    auto check = validate_scope(topology_, scope_);
    if (!check.ok()) {
      throw Error(ErrorCode::invalid_scope, "invalid scope function: " + check.violations.front().message);
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return topology_.size(); }
  [[nodiscard]] const Topology& topology() const noexcept { return topology_; }
  [[nodiscard]] const ScopeFunction& scope() const noexcept { return scope_; }
  [[nodiscard]] const PointSet& aura(std::size_t x) const { return scope_.assignment.at(x); }
  [[nodiscard]] std::string label(std::size_t x) const { return topology_.label(x); }

  [[nodiscard]] AuraSpace with_scope(ScopeFunction scope) const { return AuraSpace(topology_, std::move(scope)); }

  friend bool operator==(const AuraSpace& a, const AuraSpace& b) {
    return a.topology_ == b.topology_ && a.scope_ == b.scope_;
  }

private:
  Topology topology_;
  ScopeFunction scope_;
};

/// {x : a(x) meets A}.
inline PointSet aura_closure(const AuraSpace& s, const PointSet& a) {
  s.topology().check_universe(a);
  PointSet out(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.aura(x).intersects(a)) out.insert(x);
  }
  return out;
}

/// {x in A : a(x) inside A}.
inline PointSet aura_interior(const AuraSpace& s, const PointSet& a) {
  s.topology().check_universe(a);
  PointSet out(s.size());
  a.for_each([&](std::size_t x) {
    if (s.aura(x).subset_of(a)) out.insert(x);
  });
  return out;
}

inline PointSet iterate_closure(const AuraSpace& s, const PointSet& a, std::size_t steps) {
  s.topology().check_universe(a);
  PointSet current = a;
  for (std::size_t k = 0; k < steps; ++k) {
    auto next = aura_closure(s, current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

struct ClosureTrace {
  std::vector<PointSet> stages;  // stages[k] is the k-fold closure, up to the fixpoint
  std::size_t stabilized_at = 0;

  [[nodiscard]] const PointSet& limit() const { return stages.back(); }
};

inline ClosureTrace closure_trace(const AuraSpace& s, const PointSet& a) {
  s.topology().check_universe(a);
  ClosureTrace trace;
  trace.stages.push_back(a);
  while (true) {
    auto next = aura_closure(s, trace.stages.back());
    if (next == trace.stages.back()) break;
    trace.stages.push_back(std::move(next));
  }
  trace.stabilized_at = trace.stages.size() - 1;
  return trace;
}

/// Iterated closure taken to its fixpoint (reached after at most n steps).
inline PointSet infinity_closure(const AuraSpace& s, const PointSet& a) {
  return closure_trace(s, a).limit();
}

/// Membership test for the aura topology; works for any universe size.
inline bool is_aura_open(const AuraSpace& s, const PointSet& a) {
  s.topology().check_universe(a);
  bool ok = true;
  a.for_each([&](std::size_t x) { ok = ok && s.aura(x).subset_of(a); });
  return ok;
}

inline bool is_infinity_open(const AuraSpace& s, const PointSet& a) {
  auto c = a.complement();
  return infinity_closure(s, c) == c;
}

/// The aura-open sets, found by scanning all 2^n subsets.
inline Topology aura_topology(const AuraSpace& s) {
  require_enumerable(s.size(), kMaxEnumerableUniverse, "aura_topology");
  Family opens;
  for_each_subset(s.size(), [&](PointSet a) {
    if (is_aura_open(s, a)) opens.push_back(std::move(a));
  });
  return Topology::trusted(s.size(), std::move(opens), s.topology().labels());
}

inline Topology infinity_topology(const AuraSpace& s) {
  require_enumerable(s.size(), kMaxEnumerableUniverse, "infinity_topology");
  Family opens;
  for_each_subset(s.size(), [&](PointSet a) {
    if (is_infinity_open(s, a)) opens.push_back(std::move(a));
  });
  return Topology::trusted(s.size(), std::move(opens), s.topology().labels());
}

struct ScopeProfile {
  bool trivial = false;
  bool discrete = false;
  bool transitive = false;
  bool symmetric = false;
};

inline ScopeProfile scope_profile(const AuraSpace& s) {
  const auto n = s.size();
  ScopeProfile p{true, true, true, true};
  for (std::size_t x = 0; x < n; ++x) {
    const auto& ax = s.aura(x);
    if (!ax.is_full()) p.trivial = false;
    if (ax.size() != 1 || !s.topology().is_open(PointSet::singleton(n, x))) p.discrete = false;
    ax.for_each([&](std::size_t y) {
      if (!s.aura(y).subset_of(ax)) p.transitive = false;
      if (!s.aura(y).contains(x)) p.symmetric = false;
    });
  }
  return p;
}

}  // namespace aura
