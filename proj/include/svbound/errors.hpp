#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svbound {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed matrix text. line() is 1-based; 0 when the error is not tied
// to a particular line (e.g. premature end of input).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Shape precondition violated (non-square input, n < 2, oversize oracle input).
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError() : Error("matrix is singular") {}
};

// A numeric argument lies outside the range where a formula is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace svbound
