#pragma once

#include <stdexcept>
#include <string>

namespace rowmotion {

// Every error raised by the library derives from Error so callers (the CLI in
// particular) can map failures to exit codes with a single catch.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A denominator vanished while evaluating at a point.
class PoleEncountered : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// The (k, m, n) triple violates k <= min(r - m, s - n) + 1.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class ShiftOutOfRange : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class OutOfRangeValue : public Error {
 public:
  using Error::Error;
};

class MalformedOverlay : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rowmotion
