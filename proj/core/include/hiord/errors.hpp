#pragma once

#include <stdexcept>
#include <string>

namespace hiord {

// invalid argument values or inconsistent dimensions
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// tensor / model order outside the supported 1..4 range
class UnsupportedOrder : public ArgumentError {
 public:
  explicit UnsupportedOrder(const std::string& what) : ArgumentError(what) {}
};

// brute-force helpers only run in low dimension
class UnsupportedDimension : public ArgumentError {
 public:
  explicit UnsupportedDimension(const std::string& what) : ArgumentError(what) {}
};

// unknown catalogue entry or lookup key
class NotFound : public ArgumentError {
 public:
  explicit NotFound(const std::string& what) : ArgumentError(what) {}
};

// an operation whose preconditions exclude the current state
class NotApplicable : public std::runtime_error {
 public:
  explicit NotApplicable(const std::string& what) : std::runtime_error(what) {}
};

// a run-time invariant of the outer algorithm failed
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hiord
