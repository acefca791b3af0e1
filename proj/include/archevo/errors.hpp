#pragma once

#include <stdexcept>
#include <string>

namespace archevo {

/// Raised for invalid user-facing configuration: bad bounds, out-of-range
/// hyperparameters, impossible schedules. The message carries the offending
/// key or quantity so batch runs fail with actionable text.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace archevo
