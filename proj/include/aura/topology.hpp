#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aura/error.hpp"
#include "aura/point_set.hpp"
#include "aura/validation.hpp"

namespace aura {

namespace detail {

inline bool sorted_contains(const Family& sorted, const PointSet& s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

}  // namespace detail

/// Checks a candidate open-set family against the topology axioms on {0..n-1}.
///
/// Reports: members from a different universe, missing empty/full set,
/// duplicates, and pairs whose union or intersection is missing (first
/// failing pairs in family order).
inline ValidationResult validate_topology(std::size_t n, std::span<const PointSet> opens) {
  if (n == 0) throw Error(ErrorCode::empty_universe, "topology needs at least one point");

  ValidationResult result;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (opens[i].universe() != n) {
      result.add("universe", "open #" + std::to_string(i) + " lives in a universe of " +
                                 std::to_string(opens[i].universe()) + " points, expected " +
                                 std::to_string(n));
    }
  }
  if (!result.ok()) return result;

  Family sorted(opens.begin(), opens.end());
  std::sort(sorted.begin(), sorted.end());
  if (!detail::sorted_contains(sorted, PointSet(n))) result.add("empty_set", "the empty set is not open");
  if (!detail::sorted_contains(sorted, PointSet::full(n))) result.add("full_set", "the whole space is not open");

  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] == sorted[i + 1]) result.add("duplicate", "open " + sorted[i].to_string() + " is listed twice");
  }

  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const auto& u = opens[i];
      const auto& v = opens[j];
      if (!detail::sorted_contains(sorted, u | v)) {
        result.add("union_closure", "union of " + u.to_string() + " and " + v.to_string() + " = " +
                                        (u | v).to_string() + " is missing");
      }
      if (!detail::sorted_contains(sorted, u & v)) {
        result.add("intersection_closure", "intersection of " + u.to_string() + " and " +
                                               v.to_string() + " = " + (u & v).to_string() +
                                               " is missing");
      }
    }
  }
  return result;
}

/// A finite topology. Either stored extensionally (the full family of opens,
/// kept in numeric order) or, for the discrete topology, as a membership
/// predicate so large universes never materialize 2^n sets.
///
/// Construction validates; a Topology value always satisfies the axioms.
class Topology {
public:
  Topology() = default;

  Topology(std::size_t n, Family opens, std::vector<std::string> labels = {})
      : n_(n), opens_(std::move(opens)), labels_(std::move(labels)) {
    auto check = validate_topology(n_, opens_);
    if (!check.ok()) {
      throw Error(ErrorCode::invalid_topology, "invalid topology: " + check.violations.front().message);
    }
    std::sort(opens_.begin(), opens_.end());
    check_labels();
    build_neighbourhoods();
  }

  /// Every subset open; never materialized unless `opens()` is asked for.
  static Topology discrete(std::size_t n, std::vector<std::string> labels = {}) {
    if (n == 0) throw Error(ErrorCode::empty_universe, "topology needs at least one point");
    Topology t;
    t.n_ = n;
    t.discrete_form_ = true;
    t.labels_ = std::move(labels);
    t.check_labels();
    t.neighbourhoods_.reserve(n);
    for (std::size_t x = 0; x < n; ++x) t.neighbourhoods_.push_back(PointSet::singleton(n, x));
    return t;
  }

  /// Skips axiom checking; for families that are topologies by construction.
  static Topology trusted(std::size_t n, Family opens, std::vector<std::string> labels = {}) {
    Topology t;
    t.n_ = n;
    t.opens_ = std::move(opens);
    t.labels_ = std::move(labels);
    std::sort(t.opens_.begin(), t.opens_.end());
    t.check_labels();
    t.build_neighbourhoods();
    return t;
  }

  static Topology indiscrete(std::size_t n, std::vector<std::string> labels = {}) {
    return Topology(n, {PointSet(n), PointSet::full(n)}, std::move(labels));
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] bool is_predicate_form() const noexcept { return discrete_form_; }

  [[nodiscard]] bool is_open(const PointSet& a) const {
    check_universe(a);
    if (discrete_form_) return true;
    return detail::sorted_contains(opens_, a);
  }

  /// The open family in numeric order. Materializes the power set for the
  /// predicate form, so that case is limited to small universes.
  [[nodiscard]] Family opens() const {
    if (!discrete_form_) return opens_;
    Family all;
    for_each_subset(n_, [&](PointSet s) { all.push_back(std::move(s)); });
    return all;
  }

  [[nodiscard]] std::size_t open_count() const {
    if (!discrete_form_) return opens_.size();
    require_enumerable(n_, 63, "open_count");
    return std::size_t{1} << n_;
  }

  /// Smallest open set containing x.
  [[nodiscard]] const PointSet& neighbourhood(std::size_t x) const { return neighbourhoods_.at(x); }

  [[nodiscard]] bool is_discrete() const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (neighbourhoods_[x].size() != 1) return false;
    }
    return true;
  }

  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] std::string label(std::size_t x) const {
    return labels_.empty() ? std::to_string(x) : labels_.at(x);
  }

  void check_universe(const PointSet& a) const {
    if (a.universe() != n_) {
      throw Error(ErrorCode::universe_mismatch, "set has universe " + std::to_string(a.universe()) +
                                                    ", topology has " + std::to_string(n_) + " points");
    }
  }

  friend bool operator==(const Topology& a, const Topology& b) {
    if (a.n_ != b.n_) return false;
    if (a.discrete_form_ || b.discrete_form_) return a.is_discrete() && b.is_discrete();
    return a.opens_ == b.opens_;
  }

private:
  void check_labels() const {
    if (!labels_.empty() && labels_.size() != n_) {
      throw Error(ErrorCode::invalid_topology, "label list has " + std::to_string(labels_.size()) +
                                                   " entries for " + std::to_string(n_) + " points");
    }
  }

  void build_neighbourhoods() {
    neighbourhoods_.assign(n_, PointSet::full(n_));
    for (const auto& o : opens_) {
      o.for_each([&](std::size_t x) { neighbourhoods_[x] &= o; });
    }
  }

  std::size_t n_ = 0;
  bool discrete_form_ = false;
  Family opens_;
  std::vector<PointSet> neighbourhoods_;
  std::vector<std::string> labels_;
};

inline ValidationResult validate_topology(const Topology& t) {
  if (t.is_predicate_form()) return {};
  auto opens = t.opens();
  return validate_topology(t.size(), opens);
}

/// Largest open subset of `a`. In a finite topology this is exactly the set of
/// points whose smallest open neighbourhood lies inside `a`.
inline PointSet interior(const Topology& t, const PointSet& a) {
  t.check_universe(a);
  PointSet out(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t.neighbourhood(x).subset_of(a)) out.insert(x);
  }
  return out;
}

/// Smallest closed superset of `a`: the complement of the interior of the complement.
inline PointSet closure(const Topology& t, const PointSet& a) {
  return interior(t, a.complement()).complement();
}

inline Family closed_sets(const Topology& t) {
  Family out;
  for (const auto& o : t.opens()) out.push_back(o.complement());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Smallest topology on {0..n-1} containing every subbasis set. Alternates
/// closure under pairwise intersection and pairwise union until neither adds
/// anything; the family can never exceed 2^n members.
inline Topology topology_from_subbasis(std::size_t n, std::span<const PointSet> subbasis,
                                       std::vector<std::string> labels = {}) {
  if (n == 0) throw Error(ErrorCode::empty_universe, "topology needs at least one point");
  std::set<PointSet> family{PointSet(n), PointSet::full(n)};
  for (const auto& s : subbasis) {
    if (s.universe() != n) {
      throw Error(ErrorCode::universe_mismatch, "subbasis set has universe " + std::to_string(s.universe()));
    }
    family.insert(s);
  }

  auto close_under = [&](auto combine) {
    bool grew = false;
    std::vector<PointSet> frontier(family.begin(), family.end());
    while (!frontier.empty()) {
      std::vector<PointSet> next;
      std::vector<PointSet> snapshot(family.begin(), family.end());
      for (const auto& f : frontier) {
        for (const auto& g : snapshot) {
          auto c = combine(f, g);
          if (family.insert(c).second) next.push_back(std::move(c));
        }
      }
      grew = grew || !next.empty();
      frontier = std::move(next);
    }
    return grew;
  };

  bool changed = true;
  while (changed) {
    bool by_meet = close_under([](const PointSet& a, const PointSet& b) { return a & b; });
    bool by_join = close_under([](const PointSet& a, const PointSet& b) { return a | b; });
    changed = by_meet || by_join;
    if (family.size() > (n < 63 ? (std::size_t{1} << n) : family.max_size())) {
      throw Error(ErrorCode::invalid_topology, "subbasis closure exceeded 2^n sets");
    }
  }
  return Topology(n, Family(family.begin(), family.end()), std::move(labels));
}

}  // namespace aura
