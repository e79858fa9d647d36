#pragma once

#include <stdexcept>
#include <string>

namespace mbfcount {

// Each error category maps onto one CLI exit code (see tools/mbfcount.cpp).

/// Malformed or out-of-range input (bad lengths, mismatched variable counts).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called with arguments violating its precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A computation would exceed a configured budget (memory or time).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A required constant or configuration entry is missing or contradictory.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result failed a mathematical consistency check (e.g. non-divisible Burnside sum).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal invariant violated; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mbfcount
