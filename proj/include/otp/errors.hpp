// Error taxonomy shared across the library.
//
// input_error:      bad arguments, malformed files, violated preconditions
//                   (CLI exit code 2).
// degeneracy_error: the computation itself broke down: vanishing norms,
//                   Schur parameters at the boundary, non-positive-definite
//                   moment data (CLI exit code 3).
#pragma once

#include <stdexcept>
#include <string>

namespace otp {

struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct degeneracy_error : std::runtime_error {
  explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace otp
