#pragma once

#include <stdexcept>
#include <string>

namespace pbw {

// Two operands live over different alphabets.
class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Brute-force entry points refuse inputs above their configured size cap.
class SizeCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed or inconsistent Lie algebra data.
class LieConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pbw
