#pragma once

#include <stdexcept>
#include <string>

namespace abtuple {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vectors, tuples or lattices of different ambient dimension were mixed.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of the operation (bad arity, zero vector,
/// rank-0 tuple, malformed certificate, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A vector or lattice that must lie inside another lattice does not.
class NotContainedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An exhaustive search would exceed the configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed tuple or certificate input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace abtuple
