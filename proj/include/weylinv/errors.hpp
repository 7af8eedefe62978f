#pragma once

#include <stdexcept>
#include <string>

namespace weylinv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (bad type, bad
/// weight, m outside the semigroup, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured budget (orbit size, dimension cap, search nodes) ran out
/// before the computation could finish. Distinct from a negative answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An invariant that must hold for valid input was violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace weylinv
