#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "aura/error.hpp"

namespace aura {

/// A subset of the finite universe {0, ..., n-1}.
///
/// Binary operations require both operands to live in the same universe and
/// throw `Error{universe_mismatch}` otherwise. Ordering is numeric: the set is
/// read as a binary number with point i at bit i, so {a} < {b} < {a,b}.
class PointSet {
public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  static constexpr std::size_t npos = Bits::npos;

  PointSet() = default;
  explicit PointSet(std::size_t universe) : bits_(universe) {}

  static PointSet full(std::size_t universe) {
    PointSet s(universe);
    s.bits_.set();
    return s;
  }

  static PointSet of(std::size_t universe, std::initializer_list<std::size_t> points) {
    PointSet s(universe);
    for (auto p : points) s.insert(p);
    return s;
  }

  static PointSet of(std::size_t universe, const std::vector<std::size_t>& points) {
    PointSet s(universe);
    for (auto p : points) s.insert(p);
    return s;
  }

  /// Bit i of `mask` becomes point i. Only meaningful for universe <= 64.
  static PointSet from_mask(std::size_t universe, std::uint64_t mask) {
    PointSet s;
    s.bits_ = Bits(universe, mask);
    return s;
  }

  static PointSet singleton(std::size_t universe, std::size_t point) {
    PointSet s(universe);
    s.insert(point);
    return s;
  }

  [[nodiscard]] std::size_t universe() const noexcept { return bits_.size(); }
  [[nodiscard]] std::size_t size() const noexcept { return bits_.count(); }
  [[nodiscard]] bool empty() const noexcept { return bits_.none(); }
  [[nodiscard]] bool is_full() const noexcept { return bits_.all(); }

  [[nodiscard]] bool contains(std::size_t point) const {
    check_point(point);
    return bits_.test(point);
  }

  PointSet& insert(std::size_t point) {
    check_point(point);
    bits_.set(point);
    return *this;
  }

  PointSet& erase(std::size_t point) {
    check_point(point);
    bits_.reset(point);
    return *this;
  }

  [[nodiscard]] std::uint64_t mask() const {
    if (universe() > 64) {
      throw Error(ErrorCode::universe_too_large, "PointSet::mask needs a universe of at most 64 points");
    }
    return bits_.empty() ? 0 : static_cast<std::uint64_t>(bits_.to_ulong());
  }

  [[nodiscard]] bool subset_of(const PointSet& other) const {
    check_same(other);
    return bits_.is_subset_of(other.bits_);
  }

  [[nodiscard]] bool intersects(const PointSet& other) const {
    check_same(other);
    return bits_.intersects(other.bits_);
  }

  [[nodiscard]] PointSet complement() const {
    PointSet s = *this;
    s.bits_.flip();
    return s;
  }

  PointSet& operator|=(const PointSet& o) { check_same(o); bits_ |= o.bits_; return *this; }
  PointSet& operator&=(const PointSet& o) { check_same(o); bits_ &= o.bits_; return *this; }
  PointSet& operator-=(const PointSet& o) { check_same(o); bits_ -= o.bits_; return *this; }

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
  friend PointSet operator~(const PointSet& a) { return a.complement(); }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.universe() == b.universe() && a.bits_ == b.bits_;
  }

  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
    if (a.universe() != b.universe()) return a.universe() <=> b.universe();
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    return a.bits_ < b.bits_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  [[nodiscard]] std::size_t first() const noexcept { return bits_.find_first(); }
  [[nodiscard]] std::size_t next(std::size_t after) const noexcept { return bits_.find_next(after); }

  template <typename F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != npos; i = bits_.find_next(i)) f(i);
  }

  [[nodiscard]] std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(universe());
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(bits_, std::back_inserter(blocks));
    for (auto b : blocks) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  /// Debug rendering with point indices, e.g. "{0,2}".
  [[nodiscard]] std::string to_string() const {
    std::string out = "{";
    bool first_item = true;
    for_each([&](std::size_t i) {
      if (!first_item) out += ',';
      out += std::to_string(i);
      first_item = false;
    });
    return out + "}";
  }

private:
  void check_point(std::size_t point) const {
    if (point >= universe()) {
      throw Error(ErrorCode::universe_mismatch,
                  "point " + std::to_string(point) + " outside universe of " +
                      std::to_string(universe()));
    }
  }

  void check_same(const PointSet& other) const {
    if (universe() != other.universe()) {
      throw Error(ErrorCode::universe_mismatch,
                  "universe sizes differ: " + std::to_string(universe()) + " vs " +
                      std::to_string(other.universe()));
    }
  }

  Bits bits_;
};

using Family = std::vector<PointSet>;

/// All 2^n subsets in numeric order, handed one at a time to `f`.
template <typename F>
void for_each_subset(std::size_t n, F&& f) {
  require_enumerable(n, kMaxEnumerableUniverse, "subset enumeration");
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < count; ++m) f(PointSet::from_mask(n, m));
}

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

}  // namespace aura
