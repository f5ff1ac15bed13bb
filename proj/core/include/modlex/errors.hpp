#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modlex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates an operation's precondition (bad vertex id, self-loop,
/// disconnected host where a connected one is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its step or time budget. The answer is unknown, not
/// false.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A certificate produced by the library failed its own re-verification.
/// This always indicates a bug.
class CertificateError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace modlex
