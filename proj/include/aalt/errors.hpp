#pragma once

#include <stdexcept>
#include <string>

namespace aalt {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class ArcCountError : public InputError {
 public:
  using InputError::InputError;
};

class NonPlanar : public InputError {
 public:
  using InputError::InputError;
};

class NotRealizable : public InputError {
 public:
  using InputError::InputError;
};

// Operation called outside its domain (CLI exit code 3).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnknownCrossing : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class Disconnected : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NoCrossings : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NoMatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotAlmostAlternating : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class TooLarge : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InvalidGraph : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UngroupableFace : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UnknownBlock : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class BoundExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A Reidemeister move whose local configuration is not present.
class InvalidMove : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotPrime : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class TooFewComponents : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace aalt
