#pragma once

#include <stdexcept>

namespace metricdim {

// Bad arguments, malformed files, violated preconditions. CLI exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact-search size limits exceeded. CLI exit code 3.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite answer was requested where provably none exists. CLI exit code 4.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace metricdim
