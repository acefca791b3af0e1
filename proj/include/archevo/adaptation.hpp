#pragma once

#include <vector>

#include "archevo/individual.hpp"
#include "archevo/rng.hpp"

namespace archevo {

/// Self-adaptation settings for the per-member control parameters.
///
/// Scale factor and crossover probability follow the jDE rule: with
/// probability `tau` a member resamples the parameter uniformly from its
/// range, otherwise it inherits the previous value. When `adapt_strategy`
/// is set the mutation strategy index is resampled from `strategy_pool`
/// with the same probability.
struct AdaptationConfig {
  double f_min = 0.1;
  double f_max = 1.0;
  double cr_min = 0.0;
  double cr_max = 1.0;
  double tau = 0.1;
  bool adapt_strategy = false;
  std::vector<int> strategy_pool = {1, 2, 3, 4};

  /// Throws ConfigError when ranges or pool entries are invalid.
  void validate() const;
};

/// Draws fresh control parameters uniformly from their ranges. Used for
/// newborn members (initialization, epidemic replacement, restarts).
void init_params(Individual& member, const AdaptationConfig& config,
                 RandomSource& rng);

/// One self-adaptation step, applied in place at the start of a member's
/// generation. Value draws happen before gate draws so the draw count per
/// member is fixed, which keeps parallel replay exact.
void adapt_params(Individual& member, const AdaptationConfig& config,
                  RandomSource& rng);

}  // namespace archevo
