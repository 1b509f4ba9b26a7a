#pragma once

#include <stdexcept>
#include <string>

namespace coxheap {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph, alphabet, word, or poset description.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on an argument was violated (bad generator index, word not
// reduced, symbol outside the alphabet, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised when an operation requiring a reduced word is given one that is not.
// `prefix_length` is the length of the longest reduced prefix.
class NotReducedError : public InvalidArgument {
 public:
  NotReducedError(const std::string& what, std::size_t prefix_length)
      : InvalidArgument(what), prefix_length_(prefix_length) {}
  std::size_t prefix_length() const noexcept { return prefix_length_; }

 private:
  std::size_t prefix_length_;
};

// Sign of a root coordinate could not be decided on the floating point path,
// or an exact coordinate overflowed.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A configured cap (positions, memo entries, oracle set size, search nodes)
// was exceeded. Results are never silently truncated.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace coxheap
