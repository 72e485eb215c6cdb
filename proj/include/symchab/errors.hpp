#pragma once

#include <stdexcept>
#include <string>

namespace symchab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The parameters are legal but the operation refuses them (e.g. an unbounded search).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input. The message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The rank hypothesis r <= g - 4 is violated.
class RankConditionError : public Error {
 public:
  using Error::Error;
};

/// A brute-force scan hit its cap before it could certify an answer.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// An order-of-vanishing distribution exceeds the 2g - 2 budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace symchab
