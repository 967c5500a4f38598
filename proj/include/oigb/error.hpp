#pragma once

#include <stdexcept>
#include <string>

namespace oigb {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different widths or different modules.
class WidthMismatch : public Error {
 public:
  using Error::Error;
};

/// A value violates the invariants of its type.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A precondition of an algorithm does not hold (e.g. input not a Gröbner basis).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (the critical pair cap) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace oigb
