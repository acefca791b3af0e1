#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "archevo/adaptation.hpp"
#include "archevo/bounds.hpp"
#include "archevo/constraints.hpp"
#include "archevo/individual.hpp"
#include "archevo/population.hpp"
#include "archevo/problem.hpp"
#include "archevo/rng.hpp"
#include "archevo/worker_pool.hpp"

namespace archevo {

/// Mutation strategy indices.
///   1: v = x_r1 + F (x_r2 - x_r3)
///   2: v = x_best + F (x_r1 - x_r2)
///   3: v = x_i + F (x_r3 - x_i) + F (x_r1 - x_r2)
///   4: v = x_best + F (x_r1 - x_r2) + F (x_r3 - x_r4)
inline constexpr int kStrategyRand1 = 1;
inline constexpr int kStrategyBest1 = 2;
inline constexpr int kStrategyCurrentToRand1 = 3;
inline constexpr int kStrategyBest2 = 4;

/// Number of distinct donor indices a strategy draws.
std::size_t donor_index_demand(int strategy);

/// Minimum population size for a strategy: the donor indices, the target,
/// and the best member must all be distinct in the worst case, with the
/// global floor of kMinPopulationSize.
std::size_t min_population_size(int strategy);

/// Throws ConfigError when the strategy index is not one of 1..4.
void validate_strategy(int strategy);

using DonorVector = std::vector<double>;

/// Builds the donor vector for `target_index`. Donor indices are drawn
/// uniformly without repetition from the population excluding the target,
/// by rejection on next_index. `best_idx` is the caller-computed index of
/// the population's best member (only read by strategies 2 and 4).
DonorVector mutate(const Population& population, std::size_t target_index,
                   int strategy, double scale_factor, std::size_t best_idx,
                   RandomSource& rng);

/// Binomial crossover. Component j comes from the donor when the uniform
/// draw is <= crossover_prob or j equals the forced index j_r; the forced
/// index is drawn first, then one gate per component.
std::vector<double> crossover(const Individual& target,
                              const DonorVector& donor, double crossover_prob,
                              RandomSource& rng);

/// Projects x onto the box by saturation.
void clip_to_bounds(std::vector<double>& x, const Bounds& box);

/// Everything one generation step needs besides the population itself.
struct GenerationContext {
  const Problem* problem = nullptr;
  const Bounds* box = nullptr;  ///< current working bounds (may be pruned)
  const AdaptationConfig* adaptation = nullptr;
  /// Fixed mutation strategy for the island; ignored when the adaptation
  /// config self-adapts the strategy, in which case each member uses its own.
  int island_strategy = kStrategyRand1;
  double eps = 0.0;  ///< relaxation level of the generation being formed
  RandomSource island_stream{0};
  WorkerPool* pool = nullptr;  ///< null runs the generation serially
};

/// One synchronous generation: per member adapt parameters, then mutate,
/// crossover, clip, evaluate, and select against the target. Donors read
/// only the input population. Returns the next population with the
/// generation counter advanced; eval_count grows by the population size.
///
/// Each slot draws from its own stream derived as
/// island_stream.derived(kSlot, next_generation, slot), so the result is
/// independent of slot processing order and worker count.
Population evolve_generation(const Population& population,
                             const GenerationContext& context,
                             std::uint64_t& eval_count);

/// Stopping rules; a run halts as soon as any set criterion is met at a
/// generation boundary. At least one must be set.
struct TerminationCriteria {
  std::optional<std::uint64_t> max_fes;
  std::optional<std::uint64_t> max_generations;
  std::optional<std::uint64_t> max_stall_generations;

  void validate() const;
};

}  // namespace archevo
