#include "archevo/bounds.hpp"

#include <cmath>
#include <string>

#include "archevo/errors.hpp"

namespace archevo {

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) {
    throw ConfigError("bounds: dimension must be at least 1");
  }
  if (lower_.size() != upper_.size()) {
    throw ConfigError("bounds: lower has " + std::to_string(lower_.size()) +
                      " entries but upper has " + std::to_string(upper_.size()));
  }
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (!std::isfinite(lower_[j]) || !std::isfinite(upper_[j])) {
      throw ConfigError("bounds: dimension " + std::to_string(j) +
                        " is not finite");
    }
    if (!(lower_[j] < upper_[j])) {
      throw ConfigError("bounds: dimension " + std::to_string(j) +
                        " has non-positive width [" +
                        std::to_string(lower_[j]) + ", " +
                        std::to_string(upper_[j]) + "]");
    }
  }
}

bool Bounds::contains(std::span<const double> x) const {
  if (x.size() != lower_.size()) return false;
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (x[j] < lower_[j] || x[j] > upper_[j]) return false;
  }
  return true;
}

Bounds uniform_bounds(std::size_t dimension, double lo, double hi) {
  return Bounds(std::vector<double>(dimension, lo),
                std::vector<double>(dimension, hi));
}

}  // namespace archevo
