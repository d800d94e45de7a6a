#pragma once

#include <stdexcept>
#include <string>

namespace chernlab {

// Operands built over different rings/orders were mixed.
class ContextError : public std::invalid_argument {
public:
  explicit ContextError(const std::string& what) : std::invalid_argument(what) {}
};

// An argument is outside the operation's domain (wrong shape, non-monomial
// input to a monomial-only routine, ...).
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematical precondition failed (ideal not m-primary, wrong number of
// generators for a parameter ideal, filtration not multiplicative, ...).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A computation exceeded the configured working-degree budget.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A Hilbert-Samuel table did not stabilize within the table bound.
class StabilizationError : public ResourceError {
public:
  explicit StabilizationError(const std::string& what) : ResourceError(what) {}
};

// Random choices failed their verification budget (no superficial element
// found, no minimal reduction found, ...).
class GenericityError : public ResourceError {
public:
  explicit GenericityError(const std::string& what) : ResourceError(what) {}
};

// Script syntax error; keeps the offending position.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// Internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace chernlab
