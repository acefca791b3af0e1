#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace archevo {

/// Axis-aligned search box. Lower and upper vectors have equal length and
/// every dimension has strictly positive width.
class Bounds {
 public:
  Bounds(std::vector<double> lower, std::vector<double> upper);

  std::size_t dimension() const { return lower_.size(); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  double width(std::size_t j) const { return upper_[j] - lower_[j]; }

  bool contains(std::span<const double> x) const;

  friend bool operator==(const Bounds&, const Bounds&) = default;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// Convenience: the hypercube [lo, hi]^dimension.
Bounds uniform_bounds(std::size_t dimension, double lo, double hi);

}  // namespace archevo
