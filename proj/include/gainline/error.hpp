#pragma once

#include <stdexcept>
#include <string>

namespace gainline {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands do not fit together: index out of range, dimension or group mismatch.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A value violates the invariants of its type (bad table, non-unitary image, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (non-adjacent walk steps, unparsable files).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace gainline
