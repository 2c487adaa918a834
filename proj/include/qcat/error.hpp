#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcat {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ElementNotInLattice : public Error {
 public:
  using Error::Error;
};

class TypeMismatch : public Error {
 public:
  using Error::Error;
};

class BaseMismatch : public Error {
 public:
  using Error::Error;
};

class NotEnumerable : public Error {
 public:
  NotEnumerable() : Error("quantaloid is symbolic; its homs cannot be enumerated") {}
  using Error::Error;
};

class NotInClass : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when a materialization would exceed its size budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::size_t cardinality)
      : Error(what + " exceeds budget (reached " + std::to_string(cardinality) + ")"),
        cardinality_(cardinality) {}

  std::size_t cardinality() const noexcept { return cardinality_; }

 private:
  std::size_t cardinality_;
};

/// No colimit witness exists for the weight column `column`.
class NotCocomplete : public Error {
 public:
  NotCocomplete(std::size_t column, const std::string& name)
      : Error("no colimit witness for weight column '" + name + "'"), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Carries the list of violated axiom instances of a rejected input.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::vector<std::string> violations)
      : Error(what + ": " + (violations.empty() ? std::string("invalid") : violations.front())),
        violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// A metric-profile space breaks d(x,z) <= d(x,y) + d(y,z).
class TriangleViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace qcat
