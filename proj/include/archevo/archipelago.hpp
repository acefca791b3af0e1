#pragma once

#include <cstdint>
#include <vector>

#include "archevo/adaptation.hpp"
#include "archevo/epidemic.hpp"
#include "archevo/individual.hpp"
#include "archevo/rng.hpp"

namespace archevo {

enum class TopologyKind { kRadial, kRing, kFullyConnected };

/// Migration graph over the islands.
///
/// Radial: islands form `rings` concentric rings with an equal number of
/// spokes; island index = ring * spokes + spoke. Edges connect ring
/// neighbors on the same spoke, and the direction of the flow alternates
/// between outward (ring r to r+1) and inward (ring r to r-1) at each
/// migration event. Ring: directed cycle k to (k+1) mod N. Fully connected:
/// every ordered pair.
struct Topology {
  TopologyKind kind = TopologyKind::kRing;
  std::size_t n_islands = 1;
  std::size_t rings = 4;

  void validate() const;
};

/// Alternating direction of radial migration; other topologies ignore it.
enum class MigrationPhase { kOutward, kInward };

struct MigrationConfig {
  /// Migration happens when the generation counter is a positive multiple
  /// of this interval.
  std::uint64_t interval = 100;
  /// Per-directed-edge probability that the exchange happens at an event.
  double probability = 0.5;
  /// Fraction of the source population copied; at least one member moves.
  double fraction = 0.05;

  void validate() const;
};

/// Destination islands of `island` for the given phase.
std::vector<std::size_t> neighbors(const Topology& topology, std::size_t island,
                                   MigrationPhase phase);

/// Phase of a migration event: even events flow outward, odd events inward.
MigrationPhase migration_phase(std::uint64_t event_index);

/// One migration event. For each directed edge (ascending source index,
/// then the source's destination order) one uniform draw decides whether
/// the edge fires; a firing edge copies the source's N_b best members
/// (ranked under eps, from the pre-event snapshot) over the destination's
/// current N_b worst, with N_b = max(1, floor(fraction * N_p)) clamped to
/// N_p - 1. Population sizes never change, migration only copies, and the
/// archipelago-wide best member always survives in its home island since
/// no immigrant outranks it. Multiple sources into one destination apply
/// in ascending source order.
void migrate(std::vector<Population>& islands, const Topology& topology,
             const MigrationConfig& config, std::uint64_t event_index,
             double eps, RandomSource& rng);

}  // namespace archevo
