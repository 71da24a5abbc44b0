#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aura {

enum class ErrorCode {
  universe_mismatch,
  universe_too_large,
  empty_universe,
  invalid_topology,
  invalid_scope,
  invalid_map,
  space_mismatch,
  not_a_refinement,
  precondition,
  unknown_name,
  parse,
};

inline constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::universe_mismatch: return "universe_mismatch";
    case ErrorCode::universe_too_large: return "universe_too_large";
    case ErrorCode::empty_universe: return "empty_universe";
    case ErrorCode::invalid_topology: return "invalid_topology";
    case ErrorCode::invalid_scope: return "invalid_scope";
    case ErrorCode::invalid_map: return "invalid_map";
    case ErrorCode::space_mismatch: return "space_mismatch";
    case ErrorCode::not_a_refinement: return "not_a_refinement";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::unknown_name: return "unknown_name";
    case ErrorCode::parse: return "parse";
  }
  return "unknown";
}

/// Single exception type for every fault the library raises; `code()` says which.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Raised by document decoders; carries the 1-based line the problem was found
/// on, or 0 for text that came from a command-line flag.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::parse, line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// Largest universe for which families of subsets are materialized.
inline constexpr std::size_t kMaxEnumerableUniverse = 16;

inline void require_enumerable(std::size_t n, std::size_t limit, std::string_view what) {
  if (n > limit) {
    throw Error(ErrorCode::universe_too_large,
                std::string(what) + ": universe of " + std::to_string(n) +
                    " points exceeds the limit of " + std::to_string(limit));
  }
}

}  // namespace aura
