#pragma once

#include <cstddef>
#include <string_view>

#include "aura/aura.hpp"

namespace aura::test {

// "abd" -> {0,1,3}
inline PointSet letters(std::size_t n, std::string_view members) {
  PointSet s(n);
  for (char c : members) s.insert(static_cast<std::size_t>(c - 'a'));
  return s;
}

inline Family family(std::size_t n, std::initializer_list<std::string_view> sets) {
  Family out;
  for (auto m : sets) out.push_back(letters(n, m));
  return out;
}

// Closure as the intersection of all closed supersets, straight from the opens.
inline PointSet closure_by_closed_sets(const Topology& t, const PointSet& a) {
  PointSet out = PointSet::full(t.size());
  for (const auto& o : t.opens()) {
    const auto f = o.complement();
    if (a.subset_of(f)) out &= f;
  }
  return out;
}

// Interior as the union of all opens inside the set.
inline PointSet interior_by_opens(const Topology& t, const PointSet& a) {
  PointSet out(t.size());
  for (const auto& o : t.opens()) {
    if (o.subset_of(a)) out |= o;
  }
  return out;
}

}  // namespace aura::test
