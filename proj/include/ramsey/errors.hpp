#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// No root / optimum could be located in the search window.
struct CalibrationError : std::runtime_error {
  explicit CalibrationError(const std::string& what)
      : std::runtime_error(what) {}
};

// A reported quantity has no defined value for the given configuration
// (e.g. detector quality when a branch vector vanishes identically).
struct UndefinedQuantityError : std::runtime_error {
  explicit UndefinedQuantityError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace ramsey
