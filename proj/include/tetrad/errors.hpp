#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tetrad {

// Caller passed something the operation does not accept (mismatched fields,
// out-of-range ids, bad CLI arguments).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation is undefined for these arguments (division by zero, sigma of a
// skew pair, a degenerate quadrangle, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotATetrad : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateQuadrangle : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The structure handed in is not a model of the line axioms: some derived
// notion the geometry relies on does not behave.
class ModelInvalid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAnEquivalence : public ModelInvalid {
 public:
  using ModelInvalid::ModelInvalid;
};

class NotBipartite : public ModelInvalid {
 public:
  using ModelInvalid::ModelInvalid;
};

class Disconnected : public ModelInvalid {
 public:
  using ModelInvalid::ModelInvalid;
};

class EquivalenceBroken : public ModelInvalid {
 public:
  using ModelInvalid::ModelInvalid;
};

class MixedTriadTypes : public ModelInvalid {
 public:
  using ModelInvalid::ModelInvalid;
};

class NonSingletonIntersection : public ModelInvalid {
 public:
  using ModelInvalid::ModelInvalid;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tetrad
