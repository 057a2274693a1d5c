#pragma once

#include <stdexcept>
#include <string>

namespace fourcolor {

/// Malformed or invalid input (bad map file, unknown face, missing color).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An attachment that violates the boundary preconditions for the current k.
class IllegalAttachment : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive computation refused because it exceeds a configured cap.
class ScaleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fourcolor
