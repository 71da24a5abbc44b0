#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aura/aura_space.hpp"
#include "aura/error.hpp"
#include "aura/point_set.hpp"

namespace aura {

/// Exact non-negative ratio kept unreduced, so 2/6 prints as 2/6.
/// Comparison is by value (2/6 == 1/3).
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  /// Decimal rounded to three places, e.g. "0.333".
  [[nodiscard]] std::string decimal() const {
    const auto thousandths = static_cast<std::uint64_t>(std::llround(value() * 1000.0));
    std::string frac = std::to_string(thousandths % 1000);
    frac.insert(0, 3 - frac.size(), '0');
    return std::to_string(thousandths / 1000) + "." + frac;
  }

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num * b.den == b.num * a.den; }
};

struct ApproximationReport {
  PointSet target;
  PointSet lower;
  PointSet upper;
  PointSet boundary;
  Ratio accuracy;
  Ratio roughness;
  bool definable = false;
};

namespace detail {

inline ApproximationReport make_report(PointSet target, PointSet lower, PointSet upper) {
  ApproximationReport r;
  r.boundary = upper - lower;
  r.definable = lower == upper;
  if (upper.empty()) {
    // Accuracy is undefined for an empty upper approximation; report it as exact.
    r.accuracy = {1, 1};
  } else {
    r.accuracy = {lower.size(), upper.size()};
  }
  r.roughness = {r.accuracy.den - r.accuracy.num, r.accuracy.den};
  r.target = std::move(target);
  r.lower = std::move(lower);
  r.upper = std::move(upper);
  return r;
}

}  // namespace detail

/// Lower approximation is the aura interior, upper is the aura closure.
inline ApproximationReport approximate(const AuraSpace& s, const PointSet& a) {
  return detail::make_report(a, aura_interior(s, a), aura_closure(s, a));
}

/// Equivalence classes used as the classical approximation oracle.
class PartitionOracle {
public:
  PartitionOracle(std::size_t n, std::vector<PointSet> blocks) : n_(n), blocks_(std::move(blocks)) {
    PointSet covered(n_);
    for (const auto& b : blocks_) {
      if (b.universe() != n_) throw Error(ErrorCode::universe_mismatch, "partition block in wrong universe");
      if (b.empty()) throw Error(ErrorCode::precondition, "partition blocks must be nonempty");
      if (b.intersects(covered)) throw Error(ErrorCode::precondition, "partition blocks overlap");
      covered |= b;
    }
    if (!covered.is_full()) throw Error(ErrorCode::precondition, "partition blocks do not cover the universe");
    block_of_.resize(n_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i].for_each([&](std::size_t x) { block_of_[x] = i; });
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] const std::vector<PointSet>& blocks() const noexcept { return blocks_; }
  [[nodiscard]] const PointSet& block_of(std::size_t x) const { return blocks_.at(block_of_.at(x)); }

private:
  std::size_t n_;
  std::vector<PointSet> blocks_;
  std::vector<std::size_t> block_of_;
};

inline ApproximationReport pawlak_approximate(const PartitionOracle& p, const PointSet& a) {
  if (a.universe() != p.size()) throw Error(ErrorCode::universe_mismatch, "set and partition differ in universe");
  PointSet lower(p.size()), upper(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.block_of(x).subset_of(a)) lower.insert(x);
    if (p.block_of(x).intersects(a)) upper.insert(x);
  }
  return detail::make_report(a, std::move(lower), std::move(upper));
}

/// The auras as a partition, when they form one (they do for symmetric,
/// transitive scopes).
inline std::optional<PartitionOracle> partition_from_scope(const AuraSpace& s) {
  std::vector<PointSet> blocks;
  PointSet covered(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    const auto& a = s.aura(x);
    if (covered.contains(x)) {
      bool same_block = false;
      for (const auto& b : blocks) same_block = same_block || b == a;
      if (!same_block) return std::nullopt;
      continue;
    }
    if (a.intersects(covered)) return std::nullopt;
    covered |= a;
    blocks.push_back(a);
  }
  return PartitionOracle(s.size(), std::move(blocks));
}

/// Pointwise containment fine(x) inside coarse(x) over the same topology.
inline bool is_refinement(const AuraSpace& coarse, const AuraSpace& fine) {
  if (!(coarse.topology() == fine.topology())) {
    throw Error(ErrorCode::space_mismatch, "refinement compares scopes over the same topology");
  }
  for (std::size_t x = 0; x < coarse.size(); ++x) {
    if (!fine.aura(x).subset_of(coarse.aura(x))) return false;
  }
  return true;
}

struct RefinementReport {
  ApproximationReport coarse;
  ApproximationReport fine;
  bool lower_grows = false;       // coarse lower inside fine lower
  bool upper_shrinks = false;     // fine upper inside coarse upper
  bool boundary_shrinks = false;  // |fine boundary| <= |coarse boundary|
};

inline RefinementReport refinement_report(const AuraSpace& coarse, const AuraSpace& fine, const PointSet& a) {
  if (!is_refinement(coarse, fine)) {
    throw Error(ErrorCode::not_a_refinement, "the second scope is not pointwise inside the first");
  }
  RefinementReport r{approximate(coarse, a), approximate(fine, a)};
  r.lower_grows = r.coarse.lower.subset_of(r.fine.lower);
  r.upper_shrinks = r.fine.upper.subset_of(r.coarse.upper);
  r.boundary_shrinks = r.fine.boundary.size() <= r.coarse.boundary.size();
  return r;
}

}  // namespace aura
