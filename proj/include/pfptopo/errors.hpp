#pragma once

#include <stdexcept>

namespace pfp {

// File-system and stream failures; the CLI maps these to their own exit
// code, distinct from computation errors.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pfp
