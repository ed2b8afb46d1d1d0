#pragma once

#include <stdexcept>
#include <string>

namespace raag {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (graph files, words, descriptors, partition text).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments that violate an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size or state cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace raag
