#include "archevo/adaptation.hpp"

#include <algorithm>
#include <string>

#include "archevo/errors.hpp"

namespace archevo {

void AdaptationConfig::validate() const {
  if (!(f_min <= f_max)) {
    throw ConfigError("adaptation: f_min must not exceed f_max");
  }
  if (!(cr_min <= cr_max)) {
    throw ConfigError("adaptation: cr_min must not exceed cr_max");
  }
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw ConfigError("adaptation: tau must lie in [0, 1]");
  }
  if (adapt_strategy && strategy_pool.empty()) {
    throw ConfigError(
        "adaptation: strategy_pool must not be empty when adapt_strategy "
        "is set");
  }
  for (int s : strategy_pool) {
    if (s < 1 || s > 4) {
      throw ConfigError("adaptation: strategy_pool entry " +
                        std::to_string(s) + " is not in 1..4");
    }
  }
}

void init_params(Individual& member, const AdaptationConfig& config,
                 RandomSource& rng) {
  member.scale_factor = rng.next_in(config.f_min, config.f_max);
  member.crossover_prob = rng.next_in(config.cr_min, config.cr_max);
  if (config.adapt_strategy) {
    member.strategy =
        config.strategy_pool[rng.next_index(config.strategy_pool.size())];
  }
}

void adapt_params(Individual& member, const AdaptationConfig& config,
                  RandomSource& rng) {
  const double f_value = rng.next_double();
  const double f_gate = rng.next_double();
  if (f_gate <= config.tau) {
    member.scale_factor = config.f_min + f_value * (config.f_max - config.f_min);
  }
  const double cr_value = rng.next_double();
  const double cr_gate = rng.next_double();
  if (cr_gate <= config.tau) {
    member.crossover_prob =
        config.cr_min + cr_value * (config.cr_max - config.cr_min);
  }
  if (config.adapt_strategy) {
    const double strategy_gate = rng.next_double();
    const std::size_t pick = rng.next_index(config.strategy_pool.size());
    if (strategy_gate <= config.tau) {
      member.strategy = config.strategy_pool[pick];
    }
  }
}

}  // namespace archevo
