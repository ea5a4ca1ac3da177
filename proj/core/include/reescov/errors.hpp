#pragma once

#include <stdexcept>
#include <string>

namespace reescov {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad labels, bad JSON, invalid parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (generator count, lattice size, degree cap) was hit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace reescov
