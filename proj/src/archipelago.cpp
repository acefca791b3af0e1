#include "archevo/archipelago.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "archevo/constraints.hpp"
#include "archevo/errors.hpp"

namespace archevo {

void Topology::validate() const {
  if (n_islands == 0) {
    throw ConfigError("topology: n_islands must be at least 1");
  }
  if (kind == TopologyKind::kRadial) {
    if (rings == 0) {
      throw ConfigError("topology: radial needs at least one ring");
    }
    if (n_islands % rings != 0) {
      throw ConfigError("topology: radial needs n_islands (" +
                        std::to_string(n_islands) +
                        ") divisible by rings (" + std::to_string(rings) + ")");
    }
  }
}

void MigrationConfig::validate() const {
  if (interval == 0) {
    throw ConfigError("migration: interval must be at least 1");
  }
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw ConfigError("migration: probability must lie in [0, 1]");
  }
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw ConfigError("migration: fraction must lie in [0, 1]");
  }
}

std::vector<std::size_t> neighbors(const Topology& topology, std::size_t island,
                                   MigrationPhase phase) {
  topology.validate();
  if (island >= topology.n_islands) {
    throw ConfigError("topology: island index " + std::to_string(island) +
                      " out of range for " +
                      std::to_string(topology.n_islands) + " islands");
  }
  switch (topology.kind) {
    case TopologyKind::kRadial: {
      const std::size_t spokes = topology.n_islands / topology.rings;
      const std::size_t ring = island / spokes;
      const std::size_t spoke = island % spokes;
      if (phase == MigrationPhase::kOutward) {
        if (ring + 1 >= topology.rings) return {};
        return {(ring + 1) * spokes + spoke};
      }
      if (ring == 0) return {};
      return {(ring - 1) * spokes + spoke};
    }
    case TopologyKind::kRing: {
      if (topology.n_islands == 1) return {};
      return {(island + 1) % topology.n_islands};
    }
    case TopologyKind::kFullyConnected: {
      std::vector<std::size_t> all;
      all.reserve(topology.n_islands - 1);
      for (std::size_t k = 0; k < topology.n_islands; ++k) {
        if (k != island) all.push_back(k);
      }
      return all;
    }
  }
  return {};
}

MigrationPhase migration_phase(std::uint64_t event_index) {
  return event_index % 2 == 0 ? MigrationPhase::kOutward
                              : MigrationPhase::kInward;
}

namespace {

std::vector<std::size_t> ranking(const Population& population, double eps) {
  std::vector<std::size_t> order(population.members.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return lex_less(population.members[a],
                                     population.members[b], eps);
                   });
  return order;
}

}  // namespace

void migrate(std::vector<Population>& islands, const Topology& topology,
             const MigrationConfig& config, std::uint64_t event_index,
             double eps, RandomSource& rng) {
  topology.validate();
  config.validate();
  if (islands.size() != topology.n_islands) {
    throw ConfigError("migration: " + std::to_string(islands.size()) +
                      " islands but topology declares " +
                      std::to_string(topology.n_islands));
  }
  const MigrationPhase phase = migration_phase(event_index);

  // Snapshot each source's migrants before any replacement so every edge
  // sees pre-event populations.
  std::vector<std::vector<Individual>> migrants(islands.size());
  for (std::size_t src = 0; src < islands.size(); ++src) {
    const Population& population = islands[src];
    std::size_t n_move = static_cast<std::size_t>(std::floor(
        config.fraction * static_cast<double>(population.members.size())));
    n_move = std::max<std::size_t>(1, n_move);
    n_move = std::min(n_move, population.members.size());
    const auto order = ranking(population, eps);
    migrants[src].reserve(n_move);
    for (std::size_t k = 0; k < n_move; ++k) {
      migrants[src].push_back(population.members[order[k]]);
    }
  }

  for (std::size_t src = 0; src < islands.size(); ++src) {
    for (std::size_t dst : neighbors(topology, src, phase)) {
      const double gate = rng.next_double();
      if (!(gate < config.probability)) continue;
      Population& destination = islands[dst];
      const std::size_t n_move =
          std::min(migrants[src].size(),
                   destination.members.size() > 0
                       ? destination.members.size() - 1
                       : 0);
      const auto order = ranking(destination, eps);
      for (std::size_t k = 0; k < n_move; ++k) {
        const std::size_t worst = order[order.size() - 1 - k];
        destination.members[worst] = migrants[src][k];
      }
    }
  }
}

}  // namespace archevo
