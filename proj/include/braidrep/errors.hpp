#pragma once

#include <stdexcept>
#include <string>

namespace braidrep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (rationals, braid words, builtin specs, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Shape mismatch between matrices, vectors or subspaces.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// The input is not a valid (candidate) representation for the operation.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its stated hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A construction needs an eigenvalue outside the rationals.
class NeedsFieldExtension : public Error {
 public:
  using Error::Error;
};

/// A construction stumbled on a proper invariant subspace.
class ReducibleSignal : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold for every genuine representation failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace braidrep
