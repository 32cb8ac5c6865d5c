#pragma once

// Exception types shared by every aoperad header.

#include <stdexcept>
#include <string>

namespace aoperad {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (permutations, braid words, operad documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Two values of different arity were combined, or a list had the wrong length.
class ArityError : public Error {
 public:
  using Error::Error;
};

// A truncated construction was asked for something beyond its arity bound.
class ArityOverflow : public Error {
 public:
  using Error::Error;
};

// An operation needs element enumeration but the group is infinite.
class UnsupportedGroup : public Error {
 public:
  using Error::Error;
};

// A table would be too large to build.
class SizeOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace aoperad
