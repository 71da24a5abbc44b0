#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aura/aura_space.hpp"
#include "aura/error.hpp"
#include "aura/point_set.hpp"
#include "aura/topology.hpp"

namespace aura {

enum class OpenClass {
  open,
  semi_open,
  pre_open,
  alpha_open,
  beta_open,
  a_open,
  a_semi_open,
  a_pre_open,
  a_alpha_open,
  a_beta_open,
  a_b_open,
};

inline constexpr std::array kAllOpenClasses{
    OpenClass::open,        OpenClass::semi_open,   OpenClass::pre_open,   OpenClass::alpha_open,
    OpenClass::beta_open,   OpenClass::a_open,      OpenClass::a_semi_open, OpenClass::a_pre_open,
    OpenClass::a_alpha_open, OpenClass::a_beta_open, OpenClass::a_b_open,
};

inline constexpr std::string_view to_string(OpenClass c) noexcept {
  switch (c) {
    case OpenClass::open: return "open";
    case OpenClass::semi_open: return "semi_open";
    case OpenClass::pre_open: return "pre_open";
    case OpenClass::alpha_open: return "alpha_open";
    case OpenClass::beta_open: return "beta_open";
    case OpenClass::a_open: return "a_open";
    case OpenClass::a_semi_open: return "a_semi_open";
    case OpenClass::a_pre_open: return "a_pre_open";
    case OpenClass::a_alpha_open: return "a_alpha_open";
    case OpenClass::a_beta_open: return "a_beta_open";
    case OpenClass::a_b_open: return "a_b_open";
  }
  return "?";
}

inline OpenClass parse_open_class(std::string_view name) {
  for (auto c : kAllOpenClasses) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::unknown_name, "unknown open-set class '" + std::string(name) + "'");
}

/// Membership of one set in each classical and aura-generalized class.
struct ClassProfile {
  std::array<bool, kAllOpenClasses.size()> flags{};

  [[nodiscard]] bool operator[](OpenClass c) const { return flags[static_cast<std::size_t>(c)]; }
  bool& operator[](OpenClass c) { return flags[static_cast<std::size_t>(c)]; }
};

/// Evaluates every defining inclusion literally, one set at a time.
inline ClassProfile classify_set(const AuraSpace& s, const PointSet& a) {
  const auto& t = s.topology();
  t.check_universe(a);
  auto cl = [&](const PointSet& x) { return closure(t, x); };
  auto in = [&](const PointSet& x) { return interior(t, x); };
  auto acl = [&](const PointSet& x) { return aura_closure(s, x); };

  const auto int_a = in(a);
  const auto cl_a = cl(a);
  const auto acl_a = acl(a);
  const auto acl_int_a = acl(int_a);
  const auto int_acl_a = in(acl_a);

  ClassProfile p;
  p[OpenClass::open] = t.is_open(a);
  p[OpenClass::semi_open] = a.subset_of(cl(int_a));
  p[OpenClass::pre_open] = a.subset_of(in(cl_a));
  p[OpenClass::alpha_open] = a.subset_of(in(cl(int_a)));
  p[OpenClass::beta_open] = a.subset_of(cl(in(cl_a)));
  p[OpenClass::a_open] = is_aura_open(s, a);
  p[OpenClass::a_semi_open] = a.subset_of(acl_int_a);
  p[OpenClass::a_pre_open] = a.subset_of(int_acl_a);
  p[OpenClass::a_alpha_open] = a.subset_of(in(acl_int_a));
  p[OpenClass::a_beta_open] = a.subset_of(acl(int_acl_a));
  p[OpenClass::a_b_open] = a.subset_of(acl_int_a | int_acl_a);
  return p;
}

inline bool in_class(const AuraSpace& s, const PointSet& a, OpenClass c) { return classify_set(s, a)[c]; }

/// Every subset carrying the named flag, in numeric order.
inline Family enumerate_class(const AuraSpace& s, OpenClass c) {
  require_enumerable(s.size(), kMaxEnumerableUniverse, "enumerate_class");
  Family out;
  for_each_subset(s.size(), [&](PointSet a) {
    if (classify_set(s, a)[c]) out.push_back(std::move(a));
  });
  return out;
}

inline Family enumerate_class(const AuraSpace& s, std::string_view name) {
  return enumerate_class(s, parse_open_class(name));
}

/// A guaranteed inclusion sub => super between two classes.
struct HierarchyEdge {
  OpenClass sub;
  OpenClass super;
};

inline constexpr std::array kHierarchyEdges{
    // generalized-class diagram
    HierarchyEdge{OpenClass::open, OpenClass::a_alpha_open},
    HierarchyEdge{OpenClass::a_alpha_open, OpenClass::a_semi_open},
    HierarchyEdge{OpenClass::a_alpha_open, OpenClass::a_pre_open},
    HierarchyEdge{OpenClass::a_semi_open, OpenClass::a_b_open},
    HierarchyEdge{OpenClass::a_pre_open, OpenClass::a_b_open},
    HierarchyEdge{OpenClass::a_b_open, OpenClass::a_beta_open},
    // classical classes sit inside their aura versions
    HierarchyEdge{OpenClass::semi_open, OpenClass::a_semi_open},
    HierarchyEdge{OpenClass::pre_open, OpenClass::a_pre_open},
    HierarchyEdge{OpenClass::alpha_open, OpenClass::a_alpha_open},
    HierarchyEdge{OpenClass::beta_open, OpenClass::a_beta_open},
    // the aura topology is coarser than the topology
    HierarchyEdge{OpenClass::a_open, OpenClass::open},
};

struct EdgeReport {
  HierarchyEdge edge;
  bool holds = true;
  std::optional<PointSet> counterexample;  // in sub, not in super: an implementation fault
  std::optional<PointSet> strictness_witness;  // first set in super minus sub
  std::size_t strictness_count = 0;
};

/// Two classes that neither contain each other in general.
struct IncomparabilityReport {
  OpenClass left;
  OpenClass right;
  std::optional<PointSet> left_only;
  std::optional<PointSet> right_only;
};

struct HierarchyReport {
  std::vector<EdgeReport> edges;
  std::vector<IncomparabilityReport> incomparable;

  [[nodiscard]] bool all_hold() const {
    for (const auto& e : edges) {
      if (!e.holds) return false;
    }
    return true;
  }

  [[nodiscard]] const EdgeReport& edge(OpenClass sub, OpenClass super) const {
    for (const auto& e : edges) {
      if (e.edge.sub == sub && e.edge.super == super) return e;
    }
    throw Error(ErrorCode::unknown_name, "no such hierarchy edge");
  }
};

inline constexpr std::size_t kMaxHierarchyUniverse = 12;

/// Checks every guaranteed inclusion over all 2^n subsets; witnesses are the
/// first qualifying sets in numeric order.
inline HierarchyReport verify_hierarchy(const AuraSpace& s) {
  require_enumerable(s.size(), kMaxHierarchyUniverse, "verify_hierarchy");
  HierarchyReport report;
  for (const auto& e : kHierarchyEdges) report.edges.push_back(EdgeReport{e, true, std::nullopt, std::nullopt, 0});
  report.incomparable.push_back({OpenClass::a_semi_open, OpenClass::a_pre_open, std::nullopt, std::nullopt});

  for_each_subset(s.size(), [&](const PointSet& a) {
    const auto p = classify_set(s, a);
    for (auto& r : report.edges) {
      const bool in_sub = p[r.edge.sub];
      const bool in_super = p[r.edge.super];
      if (in_sub && !in_super) {
        r.holds = false;
        if (!r.counterexample) r.counterexample = a;
      }
      if (in_super && !in_sub) {
        ++r.strictness_count;
        if (!r.strictness_witness) r.strictness_witness = a;
      }
    }
    for (auto& r : report.incomparable) {
      if (p[r.left] && !p[r.right] && !r.left_only) r.left_only = a;
      if (p[r.right] && !p[r.left] && !r.right_only) r.right_only = a;
    }
  });
  return report;
}

}  // namespace aura
