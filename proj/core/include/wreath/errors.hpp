#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wreath {

/// An enumeration would exceed the configured element bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different (m, d) ambients or degrees.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultEnumerationBound = 50000;
inline constexpr const char* kEnumerationBoundEnv = "WREATH_ENUM_BOUND";

/// kDefaultEnumerationBound, unless WREATH_ENUM_BOUND holds a positive integer.
std::size_t enumeration_bound();

}  // namespace wreath
