#pragma once

#include <stdexcept>
#include <string>

namespace treebalance {

// Raised when an operation's precondition on its arguments does not hold.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a size guard (tree height, enumeration bound, ...) is exceeded.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace treebalance
