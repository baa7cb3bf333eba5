#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

// Malformed input: bad shapes, unparsable scalars, filtrations that are not
// nested. The CLI maps these to exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

// A mathematical guarantee failed to hold on a computed result. This always
// indicates a bug; the CLI maps it to exit status 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested computation is outside what this library implements.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hodge
