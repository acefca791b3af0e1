#pragma once

#include <cstdint>
#include <vector>

#include "archevo/bounds.hpp"
#include "archevo/individual.hpp"

namespace archevo {

/// Search-space pruning driven by the clustering of per-run best solutions.
/// The partial runs execute as the islands of the surrounding run, so
/// n_runs must equal the island count when pruning is enabled.
struct PruningConfig {
  bool enabled = false;
  /// Number of independent partial runs feeding each pruning event.
  std::size_t n_runs = 16;
  /// Initial fraction of runs whose bests form the cluster.
  double rho0 = 0.3;
  /// Per-event decrement of the cluster fraction.
  double delta_rho = 0.1;
  /// Number of pruning events.
  std::size_t n_events = 3;
  /// First event happens at floor(first_event_frac * N_G).
  double first_event_frac = 0.4;

  void validate() const;
};

struct PruningEvent {
  std::uint64_t generation = 0;
  double rho = 0.0;
};

/// Event schedule for a horizon of n_generations: event i (0-based) at
/// generation floor(first_event_frac * N_G) + i * floor((N_G - G0) / n_events)
/// with cluster fraction rho0 - i * delta_rho. Throws ConfigError when any
/// event would keep an empty cluster, fall outside the horizon, or collide
/// with another event.
std::vector<PruningEvent> pruning_schedule(const PruningConfig& config,
                                           std::uint64_t n_generations);

struct PruneResult {
  Bounds box;
  /// True when the pruned box degenerated (zero width somewhere) and the
  /// current box was kept instead.
  bool fell_back = false;
};

/// Shrinks the search box around the cluster of best solutions.
///
/// `best_sorted` holds the per-run best positions ordered best-first; the
/// cluster is its first floor(rho * size) entries (at least one required).
/// Per dimension the new interval is the cluster's hull relaxed by
/// 0.5 * (1 - rho) * original width on each side, intersected with the
/// current box. A degenerate intersection falls back to the current box.
PruneResult prune_bounds(const std::vector<std::vector<double>>& best_sorted,
                         double rho, const Bounds& original,
                         const Bounds& current);

}  // namespace archevo
