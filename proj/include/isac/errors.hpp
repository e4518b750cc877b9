#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isac {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quadrature did not reach its tolerance, or a post-check on a computed
// curve failed. The message carries the diagnostics.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested level/threshold is not bracketed by the data.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Mode-B placement was rejected more times than allowed.
class RejectionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scenario-file syntax or content error with a 1-based source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace isac
