#pragma once

#include <stdexcept>
#include <string>

namespace fdelete {

// Instance exceeds a configured size/width cap (distinct from bad input).
struct CapabilityError : std::runtime_error {
  explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fdelete
