#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace archevo {

/// Violation value carried by individuals of unconstrained problems. Minus
/// infinity sorts below every real violation, so unconstrained comparison
/// degenerates to plain fitness comparison without special cases.
inline constexpr double kNoViolation = -std::numeric_limits<double>::infinity();

/// One population member: position, cached evaluation, and the per-member
/// control parameters evolved by self-adaptation.
struct Individual {
  std::vector<double> x;
  double fitness = std::numeric_limits<double>::quiet_NaN();
  double max_violation = std::numeric_limits<double>::quiet_NaN();
  bool evaluated = false;

  double scale_factor = 0.5;
  double crossover_prob = 0.9;
  int strategy = 1;
};

struct Population {
  std::vector<Individual> members;
  std::uint64_t generation = 0;

  std::size_t size() const { return members.size(); }
};

}  // namespace archevo
