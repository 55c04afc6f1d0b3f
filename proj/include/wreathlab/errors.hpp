#pragma once

#include <stdexcept>
#include <string>

namespace wreathlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (group spec strings, JSON documents, element syntax).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A table, action or map violates a structural invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured element cap. `would_be_order`
/// is the exact decimal order that was refused.
class SizeLimitError : public Error {
 public:
  SizeLimitError(std::string what, std::string would_be_order)
      : Error(std::move(what)), would_be_order_(std::move(would_be_order)) {}
  const std::string& would_be_order() const noexcept { return would_be_order_; }

 private:
  std::string would_be_order_;
};

/// A backtracking search ran out of nodes before reaching a verdict. This is
/// never a "no".
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NonNormalSubgroup : public Error {
 public:
  using Error::Error;
};

class NotSurjective : public Error {
 public:
  using Error::Error;
};

class SectionMismatch : public Error {
 public:
  using Error::Error;
};

class NotEquivariant : public Error {
 public:
  using Error::Error;
};

class NotIsomorphism : public Error {
 public:
  using Error::Error;
};

class UnsupportedPrime : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// chi's quotient was not +1 or -1; only reachable if tower invariants break.
class NonUnitQuotient : public Error {
 public:
  using Error::Error;
};

class DivisibilityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace wreathlab
