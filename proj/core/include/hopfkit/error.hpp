#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column, const std::string& source = "")
      : Error(format(message, line, column, source)), message_(message), line_(line), column_(column) {}

  /// The message without location.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column,
                            const std::string& source) {
    std::string where = source.empty() ? "" : source + ": ";
    if (line != 0) where += "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
    return where + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised when the input algebra is not semisimple or not cosemisimple.
class NotSemisimple : public Error {
 public:
  using Error::Error;
};

/// The integral space was not one-dimensional; the structure constants are corrupt.
class IntegralSpaceError : public Error {
 public:
  using Error::Error;
};

/// A rational factor of a splitting polynomial does not split over the configured Q(zeta_N).
class FieldTooSmall : public Error {
 public:
  using Error::Error;
};

class RetriesExhausted : public Error {
 public:
  using Error::Error;
};

/// An internal exact cross-check failed. Indicates upstream corruption.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfkit
