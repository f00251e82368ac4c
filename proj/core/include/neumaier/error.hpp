#pragma once

#include <stdexcept>
#include <string>

namespace neumaier {

/// Caller supplied an argument outside the documented domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity that must hold by construction failed. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace neumaier
