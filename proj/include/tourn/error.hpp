#pragma once

#include <stdexcept>
#include <string>

namespace tourn {

// Malformed arguments: overlapping sets, out-of-range ids, bad parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input exceeds the cap of an exponential-time routine.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A documented precondition of an algorithm does not hold for the input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guarantee that should follow from the mathematics failed. Always a bug
// (or an input that lied about a verified property), never a user error.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tourn
