#pragma once

#include <stdexcept>
#include <string>

namespace farey {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the inputs was not met (bad fraction, out-of-range q, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exact integer result does not fit the working width.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// The requested computation exceeds a configured memory or term budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A number-theoretic identity that must always hold was observed to fail.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace farey
