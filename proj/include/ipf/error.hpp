// Exception hierarchy shared by every ipf module.
//
// The CLI maps DomainError, RangeError, InvalidValue and ArgumentError to
// exit code 1 and ParseError to exit code 2.

#pragma once

#include <stdexcept>
#include <string>

namespace ipf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value outside the allowed set, e.g. atom(x, 0).
class InvalidValue : public Error {
 public:
  using Error::Error;
};

// A point outside the domain of a partial operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Mixed N/Z arithmetic that leaves the positive integers, or int64 overflow.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Precondition on an argument not met (non-idempotent witness input,
// truncation too small, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ipf
