#pragma once

#include <stdexcept>
#include <string>

namespace brainswap {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed cycle notation, history files or plan files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on an argument does not hold (collisions, wrong lengths...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An odd permutation handed to a machine that only produces even ones.
class ParityError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because the instance is too large.
class SizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace brainswap
