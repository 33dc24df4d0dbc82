#pragma once

#include <stdexcept>
#include <string>

namespace lukfre {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance document.
class SyntaxError : public Error {
 public:
  using Error::Error;
};

// A membership grade outside [0, 1], or a non-finite cost.
class RangeError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Column index not admissible for the requested row.
class IndexError : public Error {
 public:
  using Error::Error;
};

// The equation system has no solution, or an internal step found a
// contradiction with a consistency verdict.
class InconsistentError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

// A self-check inside the oracle failed; what() carries the witness.
class AuditFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace lukfre
