#pragma once

#include <stdexcept>
#include <string>

namespace wm {

// Raised for malformed or inconsistent input (degree mismatch, bad text,
// violated preconditions). The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wm
