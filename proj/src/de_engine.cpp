#include "archevo/de_engine.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "archevo/errors.hpp"

namespace archevo {

std::size_t donor_index_demand(int strategy) {
  validate_strategy(strategy);
  switch (strategy) {
    case kStrategyRand1: return 3;
    case kStrategyBest1: return 2;
    case kStrategyCurrentToRand1: return 3;
    default: return 4;
  }
}

std::size_t min_population_size(int strategy) {
  return std::max(kMinPopulationSize, donor_index_demand(strategy) + 2);
}

void validate_strategy(int strategy) {
  if (strategy < 1 || strategy > 4) {
    throw ConfigError("mutation strategy " + std::to_string(strategy) +
                      " is not in 1..4");
  }
}

namespace {

/// Draws `count` distinct indices from [0, size) excluding `target`, by
/// rejection. The population floor guaranteed by min_population_size keeps
/// the expected number of rejections small.
void draw_distinct(std::size_t size, std::size_t target, std::size_t count,
                   RandomSource& rng, std::array<std::size_t, 4>& out) {
  for (std::size_t k = 0; k < count; ++k) {
    for (;;) {
      const std::size_t candidate = rng.next_index(size);
      if (candidate == target) continue;
      bool repeat = false;
      for (std::size_t prev = 0; prev < k; ++prev) {
        if (out[prev] == candidate) { repeat = true; break; }
      }
      if (!repeat) { out[k] = candidate; break; }
    }
  }
}

}  // namespace

DonorVector mutate(const Population& population, std::size_t target_index,
                   int strategy, double scale_factor, std::size_t best_idx,
                   RandomSource& rng) {
  const std::size_t size = population.members.size();
  if (size < min_population_size(strategy)) {
    throw ConfigError("mutation strategy " + std::to_string(strategy) +
                      " needs a population of at least " +
                      std::to_string(min_population_size(strategy)) +
                      " members, got " + std::to_string(size));
  }

  std::array<std::size_t, 4> r{};
  draw_distinct(size, target_index, donor_index_demand(strategy), rng, r);

  const auto member = [&](std::size_t idx) -> const std::vector<double>& {
    return population.members[idx].x;
  };
  const std::size_t dim = member(target_index).size();
  const double F = scale_factor;
  DonorVector donor(dim);

  switch (strategy) {
    case kStrategyRand1: {
      const auto &a = member(r[0]), &b = member(r[1]), &c = member(r[2]);
      for (std::size_t j = 0; j < dim; ++j) donor[j] = a[j] + F * (b[j] - c[j]);
      break;
    }
    case kStrategyBest1: {
      const auto &best = member(best_idx), &a = member(r[0]), &b = member(r[1]);
      for (std::size_t j = 0; j < dim; ++j)
        donor[j] = best[j] + F * (a[j] - b[j]);
      break;
    }
    case kStrategyCurrentToRand1: {
      const auto &self = member(target_index), &a = member(r[0]),
                 &b = member(r[1]), &c = member(r[2]);
      for (std::size_t j = 0; j < dim; ++j)
        donor[j] = self[j] + F * (c[j] - self[j]) + F * (a[j] - b[j]);
      break;
    }
    default: {
      const auto &best = member(best_idx), &a = member(r[0]), &b = member(r[1]),
                 &c = member(r[2]), &d = member(r[3]);
      for (std::size_t j = 0; j < dim; ++j)
        donor[j] = best[j] + F * (a[j] - b[j]) + F * (c[j] - d[j]);
      break;
    }
  }
  return donor;
}

std::vector<double> crossover(const Individual& target,
                              const DonorVector& donor, double crossover_prob,
                              RandomSource& rng) {
  const std::size_t dim = donor.size();
  const std::size_t forced = rng.next_index(dim);
  std::vector<double> trial(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const double gate = rng.next_double();
    trial[j] = (gate <= crossover_prob || j == forced) ? donor[j] : target.x[j];
  }
  return trial;
}

void clip_to_bounds(std::vector<double>& x, const Bounds& box) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = std::clamp(x[j], box.lower()[j], box.upper()[j]);
  }
}

void TerminationCriteria::validate() const {
  if (!max_fes && !max_generations && !max_stall_generations) {
    throw ConfigError(
        "termination: set at least one of max_fes, max_generations, "
        "max_stall_generations");
  }
}

Population evolve_generation(const Population& population,
                             const GenerationContext& context,
                             std::uint64_t& eval_count) {
  const std::size_t size = population.members.size();
  const std::uint64_t next_generation = population.generation + 1;
  const AdaptationConfig& adaptation = *context.adaptation;

  const std::size_t best = best_index(population, context.eps);

  Population next;
  next.generation = next_generation;
  next.members.resize(size);

  std::vector<std::uint64_t> slot_evals(size, 0);
  const auto step_slot = [&](std::size_t i) {
    RandomSource slot_rng =
        context.island_stream.derived(rng_tag::kSlot, next_generation, i);
    const Individual& target = population.members[i];

    Individual candidate_params = target;
    adapt_params(candidate_params, adaptation, slot_rng);
    const int strategy = adaptation.adapt_strategy ? candidate_params.strategy
                                                   : context.island_strategy;

    DonorVector donor = mutate(population, i, strategy,
                               candidate_params.scale_factor, best, slot_rng);
    Individual trial;
    trial.x = crossover(target, donor, candidate_params.crossover_prob, slot_rng);
    clip_to_bounds(trial.x, *context.box);
    trial.scale_factor = candidate_params.scale_factor;
    trial.crossover_prob = candidate_params.crossover_prob;
    trial.strategy = candidate_params.strategy;
    evaluate(*context.problem, trial, slot_evals[i]);

    if (trial_wins(trial, target, context.eps)) {
      next.members[i] = std::move(trial);
    } else {
      next.members[i] = std::move(candidate_params);
    }
  };

  if (context.pool != nullptr && context.pool->workers() > 1) {
    context.pool->parallel_for(size, step_slot);
  } else {
    for (std::size_t i = 0; i < size; ++i) step_slot(i);
  }

  for (std::uint64_t evals : slot_evals) eval_count += evals;
  return next;
}

}  // namespace archevo
