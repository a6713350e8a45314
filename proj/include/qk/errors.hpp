#pragma once

#include <stdexcept>
#include <string>

namespace qk {

/// Malformed or inconsistent user input (files, flags, orbit data).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A violated internal invariant. Indicates a bug or an unproved assumption
/// that failed on this input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qk
