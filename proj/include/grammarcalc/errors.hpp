#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grammarcalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, grammar, or rational text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An operation was applied outside its mathematical domain
/// (e.g. a negative power of zero, mismatched series variables).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the fixed-width range.
class ExponentOverflowError : public Error {
 public:
  using Error::Error;
};

/// A division that had to be exact left a remainder.
class InexactDivisionError : public Error {
 public:
  using Error::Error;
};

/// Unknown catalog key, check key, statistic or family name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A size argument is outside the supported range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Strict-mode derivation met a symbol that has no rule.
class UnruledSymbolError : public Error {
 public:
  using Error::Error;
};

}  // namespace grammarcalc
