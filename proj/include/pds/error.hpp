#pragma once

#include <stdexcept>
#include <string>

namespace pds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad modulus, invalid split, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or file input. Carries an optional line/column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"
                       : what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A floating-point computation was too ill-conditioned to report.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Always indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pds
