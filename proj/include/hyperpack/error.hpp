#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperpack {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments or queries outside an operation's domain.
class InvalidArgument : public Error {
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

// An exact search would exceed a configured size cap; we never approximate.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A checked algorithmic precondition does not hold on the given input.
class PreconditionViolation : public Error {
 public:
  PreconditionViolation(std::string which, const std::string& what)
      : Error(what), which_(std::move(which)) {}

  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

class LatticeError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperpack
