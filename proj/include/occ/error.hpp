#pragma once

#include <stdexcept>
#include <string>

namespace occ {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violation on an argument (bad generator parameters, unknown
/// cluster id, out-of-range probability, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed .occ instance, config block or report. Carries the 1-based line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The exact oracle was asked for a prefix longer than its enumeration cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was broken (e.g. Dense would have to split a cluster).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace occ
