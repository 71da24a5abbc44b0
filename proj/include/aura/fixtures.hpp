#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aura/aura_space.hpp"
#include "aura/error.hpp"
#include "aura/morphisms.hpp"
#include "aura/point_set.hpp"
#include "aura/sensor.hpp"
#include "aura/topology.hpp"

namespace aura::fixtures {

enum class Kind { space, map, deployment };

inline constexpr std::string_view to_string(Kind k) noexcept {
  switch (k) {
    case Kind::space: return "space";
    case Kind::map: return "map";
    case Kind::deployment: return "deployment";
  }
  return "?";
}

struct Entry {
  std::string_view name;
  Kind kind;
  std::string_view note;
};

inline constexpr std::array kCatalog{
    Entry{"finite_aura_basic", Kind::space, "four points, nested auras a < ab < abc < X"},
    Entry{"non_idempotent", Kind::space, "aura closure of {c} grows twice before settling"},
    Entry{"closure_coincide", Kind::space, "classical and aura closure of {b} agree"},
    Entry{"closure_strict", Kind::space, "aura closure of {b} strictly exceeds its classical closure"},
    Entry{"semi_not_pre", Kind::space, "{a,b} is aura-semi-open but neither aura-pre-open nor aura-alpha-open"},
    Entry{"pre_not_semi", Kind::space, "{a,c} is aura-pre-open but not aura-semi-open"},
    Entry{"trivial_on_discrete", Kind::space, "discrete topology, every aura is the whole space"},
    Entry{"discrete_aura", Kind::space, "discrete topology, every aura is a singleton"},
    Entry{"medical", Kind::space, "six patients with diagnostic-similarity auras"},
    Entry{"medical_refined", Kind::space, "medical auras of p2 and p5 narrowed"},
    Entry{"epidemic_seven", Kind::space, "seven people with forward transmission neighbourhoods"},
    Entry{"partition_collapse", Kind::map, "self-map of pre_not_semi sending b to a and d to c"},
    Entry{"sensor_three", Kind::deployment, "three disk sensors over [-4,7]x[-4,6] at spacing 0.5"},
};

inline const Entry& entry(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::unknown_name, "unknown fixture '" + std::string(name) + "'");
}

namespace detail {

inline std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

// Sets written as strings of single-letter labels, e.g. "abd".
inline PointSet set(std::size_t n, std::string_view members) {
  PointSet s(n);
  for (char c : members) s.insert(static_cast<std::size_t>(c - 'a'));
  return s;
}

inline Family family(std::size_t n, std::initializer_list<std::string_view> sets) {
  Family out;
  for (auto m : sets) out.push_back(set(n, m));
  return out;
}

inline ScopeFunction scope(std::size_t n, std::initializer_list<std::string_view> auras) {
  ScopeFunction s;
  for (auto m : auras) s.assignment.push_back(set(n, m));
  return s;
}

inline AuraSpace lettered(std::size_t n, std::initializer_list<std::string_view> opens,
                          std::initializer_list<std::string_view> auras) {
  return AuraSpace(Topology(n, family(n, opens), letters(n)), scope(n, auras));
}

inline AuraSpace lettered_discrete(std::size_t n, std::initializer_list<std::string_view> auras) {
  return AuraSpace(Topology::discrete(n, letters(n)), scope(n, auras));
}

inline std::vector<PointSet> patient_auras(bool refined) {
  constexpr std::size_t n = 6;
  auto p = [](std::initializer_list<std::size_t> ids) {
    PointSet s(n);
    for (auto i : ids) s.insert(i - 1);
    return s;
  };
  return {p({1, 2}), refined ? p({1, 2}) : p({1, 2, 3}), p({2, 3}),
          p({4, 5}), refined ? p({4, 5}) : p({4, 5, 6}), p({5, 6})};
}

inline AuraSpace patients(bool refined) {
  constexpr std::size_t n = 6;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("p" + std::to_string(i));
  // Both variants share the topology generated by the coarse auras.
  const auto coarse = patient_auras(false);
  auto t = topology_from_subbasis(n, coarse, std::move(labels));
  return AuraSpace(std::move(t), ScopeFunction{patient_auras(refined)});
}

}  // namespace detail

inline AuraSpace space(std::string_view name) {
  using namespace detail;
  const auto& e = entry(name);
  if (e.kind != Kind::space) {
    throw Error(ErrorCode::unknown_name, "fixture '" + std::string(name) + "' is a " +
                                             std::string(to_string(e.kind)) + ", not a space");
  }
  if (name == "finite_aura_basic") {
    return lettered(4, {"", "a", "b", "ab", "abc", "abcd"}, {"a", "ab", "abc", "abcd"});
  }
  if (name == "non_idempotent") return lettered_discrete(3, {"ab", "bc", "c"});
  if (name == "closure_coincide") return lettered(3, {"", "a", "bc", "abc"}, {"a", "bc", "bc"});
  if (name == "closure_strict") return lettered_discrete(3, {"ab", "b", "c"});
  if (name == "semi_not_pre") {
    return lettered(4, {"", "a", "c", "ac", "abc", "abcd"}, {"a", "abc", "c", "abcd"});
  }
  if (name == "pre_not_semi") return lettered(4, {"", "ab", "cd", "abcd"}, {"ab", "ab", "cd", "abcd"});
  if (name == "trivial_on_discrete") return lettered_discrete(3, {"abc", "abc", "abc"});
  if (name == "discrete_aura") return lettered_discrete(3, {"a", "b", "c"});
  if (name == "medical") return patients(false);
  if (name == "medical_refined") return patients(true);
  // epidemic_seven
  return lettered_discrete(7, {"ab", "bcd", "c", "de", "ef", "f", "g"});
}

inline SpaceMap map(std::string_view name) {
  const auto& e = entry(name);
  if (e.kind != Kind::map) {
    throw Error(ErrorCode::unknown_name, "fixture '" + std::string(name) + "' is a " +
                                             std::string(to_string(e.kind)) + ", not a map");
  }
  auto s = space("pre_not_semi");
  SpaceMap m{s, s, {0, 0, 2, 2}};
  require_valid_map(m);
  return m;
}

inline sensor::SensorDeployment deployment(std::string_view name) {
  const auto& e = entry(name);
  if (e.kind != Kind::deployment) {
    throw Error(ErrorCode::unknown_name, "fixture '" + std::string(name) + "' is a " +
                                             std::string(to_string(e.kind)) + ", not a deployment");
  }
  sensor::SensorDeployment d;
  d.sensors = {{{0, 0}, 3}, {{4, 0}, 2}, {{2, 3}, 2}};
  d.region = {-4, -4, 7, 6};
  d.resolution = 0.5;
  sensor::validate_deployment(d);
  return d;
}

inline std::vector<std::string_view> names(std::optional<Kind> kind = std::nullopt) {
  std::vector<std::string_view> out;
  for (const auto& e : kCatalog) {
    if (!kind || e.kind == *kind) out.push_back(e.name);
  }
  return out;
}

}  // namespace aura::fixtures
