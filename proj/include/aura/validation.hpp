#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace aura {

struct Violation {
  std::string rule;     // short machine-readable tag, e.g. "union_closure"
  std::string message;  // human-readable, uses point indices
  std::optional<std::size_t> point;
};

/// Outcome of a structural check. Violations are data, never exceptions.
struct ValidationResult {
  std::vector<Violation> violations;
  bool truncated = false;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }

  void add(std::string rule, std::string message, std::optional<std::size_t> point = std::nullopt) {
    if (violations.size() >= kMaxViolations) {
      truncated = true;
      return;
    }
    violations.push_back({std::move(rule), std::move(message), point});
  }

  static constexpr std::size_t kMaxViolations = 64;
};

}  // namespace aura
