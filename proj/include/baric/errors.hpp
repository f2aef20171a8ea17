#pragma once

#include <stdexcept>
#include <string>

namespace baric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different fields, or a field is unsupported.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Vector, matrix or algebra dimensions do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured evaluation budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace baric
