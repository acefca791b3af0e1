#pragma once

#include <cstdint>

#include "archevo/adaptation.hpp"
#include "archevo/individual.hpp"
#include "archevo/problem.hpp"
#include "archevo/rng.hpp"

namespace archevo {

/// Smallest population size that leaves every mutation strategy enough
/// distinct donor indices besides the target and the best member.
inline constexpr std::size_t kMinPopulationSize = 5;

/// Uniform random population over `box`, fully evaluated, generation 0.
/// Control parameters are drawn per member via init_params; `fixed_strategy`
/// seeds the strategy field when the config does not self-adapt it.
///
/// Draw order per member: dimension coordinates, then parameters. All
/// members draw from `rng` sequentially, so a population is a pure function
/// of the source identity.
Population init_population(const Problem& problem, const Bounds& box,
                           std::size_t size, const AdaptationConfig& adaptation,
                           int fixed_strategy, RandomSource& rng,
                           std::uint64_t& eval_count);

}  // namespace archevo
