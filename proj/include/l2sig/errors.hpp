#pragma once

#include <stdexcept>
#include <string>

namespace l2sig {

/// Caller passed arguments that do not fit together (mismatched conductors,
/// groups, wrong arity). The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed input text. Line and column are 1-based; 0 means the error has
/// no text position (schema errors found after parsing).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(line == 0 ? what
                                     : what + " at line " + std::to_string(line) + ", column " +
                                           std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A form document parsed but its matrix is not hermitian.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::size_t row, std::size_t col)
      : std::runtime_error("matrix is not hermitian at (" + std::to_string(row) + "," +
                           std::to_string(col) + ")"),
        row_(row),
        col_(col) {}

  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

}  // namespace l2sig
