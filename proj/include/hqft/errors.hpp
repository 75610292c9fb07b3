#pragma once

#include <stdexcept>
#include <string>

namespace hqft {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that cannot be parsed or that references objects which do not exist.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant of a value does not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class NotAHomomorphism : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class InvalidClass : public Error {
 public:
  using Error::Error;
};

class GluingError : public Error {
 public:
  using Error::Error;
};

class InvalidSite : public Error {
 public:
  using Error::Error;
};

class ObjectMismatch : public Error {
 public:
  using Error::Error;
};

class NotMonoidalFunctor : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace hqft
