#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "archevo/adaptation.hpp"
#include "archevo/archipelago.hpp"
#include "archevo/constraints.hpp"
#include "archevo/de_engine.hpp"
#include "archevo/epidemic.hpp"
#include "archevo/history.hpp"
#include "archevo/problem.hpp"
#include "archevo/pruning.hpp"

namespace archevo {

/// Per-island settings. strategy = 0 means the island self-adapts the
/// strategy per its adaptation config; 1..4 pin it, which requires
/// adaptation.adapt_strategy to be off. The default spec is the
/// self-adaptive single-island baseline.
struct IslandSpec {
  IslandSpec() { adaptation.adapt_strategy = true; }

  int strategy = 0;
  std::size_t population_size = 64;
  AdaptationConfig adaptation;
  EpidemicConfig epidemic;
};

/// Settings for the epsilon relaxation. Fields left unset are resolved at
/// run start: eps0 from the 90th percentile (nearest-rank) of the initial
/// populations' violations, n0 as floor(N_G / 6), n_inf as N_G.
struct EpsilonSettings {
  std::optional<double> eps0;
  double eps_inf = 1e-8;
  std::optional<std::uint64_t> n0;
  std::optional<std::uint64_t> n_inf;
};

/// Full specification of one optimization run.
struct RunConfig {
  std::vector<IslandSpec> islands;
  Topology topology;
  MigrationConfig migration;
  EpsilonSettings epsilon;
  PruningConfig pruning;
  TerminationCriteria termination;
  std::size_t workers = 1;

  std::size_t n_islands() const { return islands.size(); }
};

struct RunResult {
  Individual best;
  /// True when `best` satisfies every constraint outright (violation <= 0).
  bool feasible = false;
  std::uint64_t generations = 0;
  std::uint64_t fes = 0;
  EpsilonSchedule epsilon;
  RunHistory history;
};

/// Runs the full algorithm: synchronized island evolution with periodic
/// migration, per-island epidemics, the shared epsilon schedule, and
/// optional pruning events (each island acting as one partial run whose
/// best feeds the cluster). A single-island config degenerates to the plain
/// engine loop. The reported best is the best outright-feasible individual
/// ever seen, or the least-violating one when none exists.
RunResult optimize(const Problem& problem, const RunConfig& config,
                   std::uint64_t seed);

}  // namespace archevo
