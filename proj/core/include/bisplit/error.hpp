#pragma once

#include <stdexcept>
#include <string>

namespace bisplit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad labels, indices, non-antichains).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The ideal has a single minimal generator, so no proper bipartition exists.
class NotSplittable : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace bisplit
