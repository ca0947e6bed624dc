#pragma once

#include <stdexcept>
#include <string>

namespace skewdg {

// Malformed input: bad dimensions, unparsable rationals, letters out of range.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Request outside the supported families (resolve on rank-0 M, n > 3 iso search).
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cross-check failed. Never swallowed.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace skewdg
