#pragma once

#include <stdexcept>
#include <string>

namespace cycloid {

/// Precondition or guard violation on otherwise well-formed input
/// (guard of a shear, firing a disabled transition, unknown node, size cap).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// 64-bit arithmetic would overflow, or a parameter exceeds the configured bound.
class OverflowError : public DomainError {
 public:
  explicit OverflowError(const std::string& what) : DomainError(what) {}
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cycloid
