#include "archevo/runner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "archevo/errors.hpp"
#include "archevo/population.hpp"

namespace archevo {

namespace {

std::size_t strategy_demand_population(const IslandSpec& spec) {
  if (spec.adaptation.adapt_strategy) {
    std::size_t need = kMinPopulationSize;
    for (int s : spec.adaptation.strategy_pool) {
      need = std::max(need, min_population_size(s));
    }
    return need;
  }
  return min_population_size(spec.strategy);
}

void validate_config(const Problem& problem, const RunConfig& config) {
  if (config.islands.empty()) {
    throw ConfigError("run: at least one island required");
  }
  config.termination.validate();
  config.migration.validate();
  Topology topology = config.topology;
  if (topology.n_islands != config.islands.size()) {
    throw ConfigError("run: topology declares " +
                      std::to_string(topology.n_islands) +
                      " islands but " + std::to_string(config.islands.size()) +
                      " island specs given");
  }
  topology.validate();
  if (config.workers == 0) {
    throw ConfigError("run: workers must be at least 1");
  }

  for (std::size_t i = 0; i < config.islands.size(); ++i) {
    const IslandSpec& spec = config.islands[i];
    spec.adaptation.validate();
    spec.epidemic.validate();
    if (spec.adaptation.adapt_strategy) {
      if (spec.strategy != 0) {
        throw ConfigError("island " + std::to_string(i) +
                          ": strategy is pinned to " +
                          std::to_string(spec.strategy) +
                          " but adapt_strategy is on; set strategy to 0 or "
                          "turn adapt_strategy off");
      }
    } else if (spec.strategy == 0) {
      throw ConfigError("island " + std::to_string(i) +
                        ": strategy 0 requests self-adaptation but "
                        "adapt_strategy is off; pin a strategy in 1..4 or "
                        "turn adapt_strategy on");
    } else {
      validate_strategy(spec.strategy);
    }
    const std::size_t need = strategy_demand_population(spec);
    if (spec.population_size < need) {
      throw ConfigError(
          "island " + std::to_string(i) + ": population_size " +
          std::to_string(spec.population_size) + " is below the minimum " +
          std::to_string(need) + " required by its mutation strategies");
    }
    if (spec.population_size != config.islands[0].population_size &&
        config.islands.size() > 1) {
      throw ConfigError(
          "run: all islands must share one population_size; island " +
          std::to_string(i) + " differs");
    }
  }

  if (config.pruning.enabled) {
    config.pruning.validate();
    if (config.pruning.n_runs != config.islands.size()) {
      throw ConfigError("pruning: n_runs (" +
                        std::to_string(config.pruning.n_runs) +
                        ") must equal the island count (" +
                        std::to_string(config.islands.size()) +
                        "); partial runs execute as islands");
    }
    if (!config.termination.max_generations) {
      throw ConfigError(
          "pruning: termination.max_generations must be set to place the "
          "event schedule");
    }
    const auto elites = static_cast<std::size_t>(std::floor(
        config.pruning.rho0 * static_cast<double>(config.pruning.n_runs)));
    if (elites > config.islands[0].population_size) {
      throw ConfigError(
          "pruning: first event would re-seed " + std::to_string(elites) +
          " elites into populations of size " +
          std::to_string(config.islands[0].population_size));
    }
  }

  if (problem.constrained()) {
    const EpsilonSettings& eps = config.epsilon;
    if (!(eps.eps_inf > 0.0)) {
      throw ConfigError("epsilon: eps_inf must be positive");
    }
    if (eps.eps0 && !(*eps.eps0 >= eps.eps_inf)) {
      throw ConfigError("epsilon: eps0 must be at least eps_inf");
    }
    const bool has_horizon = config.termination.max_generations.has_value() ||
                             config.termination.max_fes.has_value();
    if ((!eps.n0 || !eps.n_inf) && !has_horizon) {
      throw ConfigError(
          "epsilon: n0/n_inf defaults need max_generations or max_fes; set "
          "them explicitly for stall-only runs");
    }
  }
}

/// Nearest-rank percentile (inclusive): the smallest value with at least
/// p * n of the sample at or below it.
double nearest_rank_percentile(std::vector<double> values, double p) {
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  std::size_t rank = static_cast<std::size_t>(std::ceil(p * n));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  return values[rank - 1];
}

struct IslandRuntime {
  IslandSpec spec;
  Population population;
  RandomSource stream{0};
  std::uint64_t last_epidemic = 0;
  std::uint64_t restarts = 0;
};

struct BestTracker {
  Individual incumbent;
  bool has_value = false;
  bool improved = false;

  void consider(const Individual& candidate) {
    if (!has_value || lex_less(candidate, incumbent, 0.0)) {
      incumbent = candidate;
      has_value = true;
      improved = true;
    }
  }
};

}  // namespace

RunResult optimize(const Problem& problem, const RunConfig& config,
                   std::uint64_t seed) {
  validate_config(problem, config);

  const std::size_t n_islands = config.islands.size();
  const Bounds original_box = problem.bounds();
  Bounds current_box = original_box;
  const RandomSource root(seed);
  WorkerPool pool(config.workers);

  std::uint64_t fes = 0;
  std::vector<IslandRuntime> islands(n_islands);
  for (std::size_t i = 0; i < n_islands; ++i) {
    islands[i].spec = config.islands[i];
    islands[i].stream = root.derived(rng_tag::kIsland, i);
    RandomSource init_rng = islands[i].stream.derived(rng_tag::kInit, 0);
    islands[i].population = init_population(
        problem, current_box, islands[i].spec.population_size,
        islands[i].spec.adaptation, islands[i].spec.strategy, init_rng, fes);
  }

  // Generation horizon used for schedule defaults when only an FES budget
  // is given: the budget divided by the per-generation cost.
  std::uint64_t horizon = 0;
  if (config.termination.max_generations) {
    horizon = *config.termination.max_generations;
  } else if (config.termination.max_fes) {
    std::uint64_t per_generation = 0;
    for (const auto& island : islands) {
      per_generation += island.spec.population_size;
    }
    horizon = *config.termination.max_fes / std::max<std::uint64_t>(
                                                1, per_generation);
  }

  EpsilonSchedule schedule;
  const bool constrained = problem.constrained();
  if (constrained) {
    schedule.eps_inf = config.epsilon.eps_inf;
    if (config.epsilon.eps0) {
      schedule.eps0 = *config.epsilon.eps0;
    } else {
      std::vector<double> violations;
      for (const auto& island : islands) {
        for (const auto& member : island.population.members) {
          if (std::isfinite(member.max_violation)) {
            violations.push_back(member.max_violation);
          }
        }
      }
      double eps0 = violations.empty()
                        ? schedule.eps_inf
                        : nearest_rank_percentile(std::move(violations), 0.9);
      schedule.eps0 = std::max(eps0, schedule.eps_inf);
    }
    schedule.n_inf = config.epsilon.n_inf ? *config.epsilon.n_inf
                                          : std::max<std::uint64_t>(1, horizon);
    schedule.n0 = config.epsilon.n0 ? *config.epsilon.n0 : horizon / 6;
    if (schedule.n0 >= schedule.n_inf) schedule.n0 = schedule.n_inf - 1;
    schedule.validate();
  }
  const auto eps_for = [&](std::uint64_t generation) {
    return constrained ? epsilon_level(schedule, generation) : 0.0;
  };

  std::vector<PruningEvent> pruning_events;
  if (config.pruning.enabled) {
    pruning_events = pruning_schedule(config.pruning, horizon);
  }

  BestTracker best;
  for (const auto& island : islands) {
    for (const auto& member : island.population.members) {
      best.consider(member);
    }
  }

  RunHistory history;
  std::uint64_t stall = 0;
  std::uint64_t migration_events = 0;
  std::uint64_t generation = 0;

  const auto record = [&](double diversity, bool epidemic_fired,
                          int pruning_event) {
    GenerationRecord row;
    row.generation = generation;
    row.fes = fes;
    const double eps_now = eps_for(generation);
    row.epsilon = constrained ? eps_now : 0.0;
    row.diversity = diversity;
    row.epidemic_fired = epidemic_fired;
    row.pruning_event = pruning_event;
    row.island_best_f.reserve(n_islands);
    const Individual* global = nullptr;
    for (const auto& island : islands) {
      const std::size_t idx = best_index(island.population, eps_now);
      const Individual& island_best = island.population.members[idx];
      row.island_best_f.push_back(island_best.fitness);
      if (global == nullptr || lex_less(island_best, *global, eps_now)) {
        global = &island_best;
      }
    }
    row.best_f = global->fitness;
    row.best_psi_max = global->max_violation;
    history.records.push_back(std::move(row));
  };

  const auto should_stop = [&] {
    if (config.termination.max_fes && fes >= *config.termination.max_fes) {
      return true;
    }
    if (config.termination.max_generations &&
        generation >= *config.termination.max_generations) {
      return true;
    }
    if (config.termination.max_stall_generations &&
        stall >= *config.termination.max_stall_generations) {
      return true;
    }
    return false;
  };

  record(std::numeric_limits<double>::quiet_NaN(), false, -1);

  std::size_t next_pruning = 0;
  while (!should_stop()) {
    const std::uint64_t next_generation = generation + 1;
    const double eps_sel = eps_for(next_generation);

    // Lockstep generation step: every island advances once before any
    // barrier event runs. Slots inside an island evolve on the pool.
    for (auto& island : islands) {
      GenerationContext context;
      context.problem = &problem;
      context.box = &current_box;
      context.adaptation = &island.spec.adaptation;
      context.island_strategy = island.spec.strategy;
      context.eps = eps_sel;
      context.island_stream = island.stream;
      context.pool = &pool;
      island.population = evolve_generation(island.population, context, fes);
    }
    generation = next_generation;

    // Barrier events: epidemics per island, then migration, then pruning.
    double diversity_sum = 0.0;
    std::size_t diversity_count = 0;
    bool epidemic_fired = false;
    for (auto& island : islands) {
      const EpidemicConfig& epidemic = island.spec.epidemic;
      if (!epidemic.enabled || generation % epidemic.stride != 0) continue;
      const double diversity =
          diversity_score(island.population, original_box);
      diversity_sum += diversity;
      ++diversity_count;
      RandomSource epidemic_rng =
          island.stream.derived(rng_tag::kEpidemic, generation);
      const Bounds& reinit_box =
          epidemic.reinit_original_bounds ? original_box : current_box;
      const EpidemicOutcome outcome = maybe_epidemic(
          island.population, diversity, epidemic, island.spec.adaptation,
          problem, reinit_box, eps_sel, generation, island.last_epidemic,
          epidemic_rng, fes);
      epidemic_fired = epidemic_fired || outcome.fired;
    }

    if (n_islands > 1 && generation % config.migration.interval == 0) {
      std::vector<Population> populations;
      populations.reserve(n_islands);
      for (auto& island : islands) {
        populations.push_back(std::move(island.population));
      }
      RandomSource migration_rng =
          root.derived(rng_tag::kMigration, generation);
      migrate(populations, config.topology, config.migration,
              migration_events, eps_sel, migration_rng);
      ++migration_events;
      for (std::size_t i = 0; i < n_islands; ++i) {
        islands[i].population = std::move(populations[i]);
      }
    }

    int pruning_marker = -1;
    if (next_pruning < pruning_events.size() &&
        generation == pruning_events[next_pruning].generation) {
      const PruningEvent& event = pruning_events[next_pruning];

      std::vector<const Individual*> run_bests;
      run_bests.reserve(n_islands);
      for (const auto& island : islands) {
        run_bests.push_back(
            &island.population.members[best_index(island.population, eps_sel)]);
      }
      std::stable_sort(run_bests.begin(), run_bests.end(),
                       [&](const Individual* a, const Individual* b) {
                         return lex_less(*a, *b, eps_sel);
                       });
      std::vector<std::vector<double>> best_sorted;
      best_sorted.reserve(run_bests.size());
      for (const Individual* member : run_bests) {
        best_sorted.push_back(member->x);
      }

      PruneResult pruned =
          prune_bounds(best_sorted, event.rho, original_box, current_box);
      current_box = pruned.box;

      const auto n_elites = static_cast<std::size_t>(std::floor(
          event.rho * static_cast<double>(config.pruning.n_runs)));
      std::vector<Individual> elites;
      elites.reserve(n_elites);
      for (std::size_t k = 0; k < n_elites; ++k) {
        elites.push_back(*run_bests[k]);
      }

      for (auto& island : islands) {
        ++island.restarts;
        RandomSource init_rng =
            island.stream.derived(rng_tag::kInit, island.restarts);
        Population fresh = init_population(
            problem, current_box, island.spec.population_size,
            island.spec.adaptation, island.spec.strategy, init_rng, fes);
        fresh.generation = generation;

        std::vector<std::size_t> order(fresh.members.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                           return lex_less(fresh.members[a], fresh.members[b],
                                           eps_sel);
                         });
        for (std::size_t k = 0; k < elites.size(); ++k) {
          fresh.members[order[order.size() - 1 - k]] = elites[k];
        }
        island.population = std::move(fresh);
      }
      pruning_marker = static_cast<int>(next_pruning);
      ++next_pruning;
    }

    best.improved = false;
    for (const auto& island : islands) {
      for (const auto& member : island.population.members) {
        best.consider(member);
      }
    }
    stall = best.improved ? 0 : stall + 1;

    record(diversity_count > 0
               ? diversity_sum / static_cast<double>(diversity_count)
               : std::numeric_limits<double>::quiet_NaN(),
           epidemic_fired, pruning_marker);
  }

  RunResult result;
  result.best = best.incumbent;
  result.feasible = best.incumbent.max_violation <= 0.0;
  result.generations = generation;
  result.fes = fes;
  if (constrained) {
    result.epsilon = schedule;
  } else {
    result.epsilon = EpsilonSchedule{};
  }
  result.history = std::move(history);
  return result;
}

}  // namespace archevo
