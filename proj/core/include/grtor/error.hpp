#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grtor {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (ring mismatch, bad bounds, malformed input).
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : UsageError(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return "parse error at column " + std::to_string(column) + ": " + what;
    return "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A cancellation step with a >= b.
class InvalidCancellation : public Error {
 public:
  using Error::Error;
};

/// A cancellation step would drive a coefficient negative.
class CancellationInfeasible : public Error {
 public:
  using Error::Error;
};

/// Subtraction of series produced a negative coefficient at (i, j).
class NegativeCoefficient : public Error {
 public:
  NegativeCoefficient(int i, int j, long long value)
      : Error("negative coefficient " + std::to_string(value) + " at (i=" + std::to_string(i) +
              ", j=" + std::to_string(j) + ")"),
        i_(i),
        j_(j),
        value_(value) {}

  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }
  long long value() const noexcept { return value_; }

 private:
  int i_;
  int j_;
  long long value_;
};

/// A local computation needed degrees beyond the configured truncation cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Order-by-order lifting could not be completed below the cap.
class LiftWindowExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace grtor
