#pragma once

#include <stdexcept>
#include <string>

namespace sse {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid construction parameters (family specs, flag values).
struct ParameterError : Error {
  using Error::Error;
};

/// An operation was called outside its mathematical domain
/// (empty set, zero vector, p < 1, dimension mismatch, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Edge-list text that does not conform to the format.
struct ParseError : Error {
  ParseError(const std::string& what, long line)
      : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
  long line;
};

/// Random generation gave up (pairing-model rejection budget exhausted).
struct GenerationError : Error {
  using Error::Error;
};

/// An iterative numerical routine failed to converge.
struct NumericalError : Error {
  NumericalError(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

/// Exact enumeration would exceed the configured work budget.
struct BudgetError : Error {
  using Error::Error;
};

/// A documented precondition does not hold for the given inputs.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace sse
