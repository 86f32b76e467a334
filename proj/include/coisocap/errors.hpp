#pragma once

#include <stdexcept>
#include <string>

namespace coisocap {

// Precondition outside the domain where a function is defined.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Naive oracle asked for an instance above its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer arithmetic left the representable range. Never wraps silently.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Malformed user input (object expressions, rationals, CLI arguments).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace coisocap
