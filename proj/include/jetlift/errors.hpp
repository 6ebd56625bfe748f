#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetlift {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownIdentifierError : public ParseError {
 public:
  using ParseError::ParseError;
};

class NonConstantExponentError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Raised when operands live on different spaces or have incompatible shapes.
class SpaceMismatchError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a denominator (or log argument) below the singular guard.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// Evaluation left the real domain of a function (log or sqrt of a negative number, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A procedural field was differentiated beyond its supported order.
class DerivativeOrderError : public Error {
 public:
  using Error::Error;
};

/// An operation's structural precondition failed (R(dt) != 0, X not vertical, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SingularJacobianError : public Error {
 public:
  using Error::Error;
};

class NewtonFailureError : public Error {
 public:
  using Error::Error;
};

/// Eigenvalues complex, clustered, or the block is defective.
class EigenError : public Error {
 public:
  using Error::Error;
};

/// Eigenvalues are not functionally independent, so they cannot serve as coordinates.
class DegenerateJacobianError : public Error {
 public:
  using Error::Error;
};

class TorsionNonzeroError : public Error {
 public:
  using Error::Error;
};

/// Too many rejected sample points.
class SamplingError : public Error {
 public:
  using Error::Error;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace jetlift
