#pragma once

#include <stdexcept>
#include <string>

namespace dgq {

/// Malformed or out-of-contract input (bad quiver, inhomogeneous element, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource cap (paths per slice) was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency assertion failed. Indicates a bug, not a property
/// of the input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dgq
