#include "archevo/pruning.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "archevo/errors.hpp"

namespace archevo {

void PruningConfig::validate() const {
  if (!enabled) return;
  if (n_runs == 0) {
    throw ConfigError("pruning: n_runs must be at least 1");
  }
  if (n_events == 0) {
    throw ConfigError("pruning: n_events must be at least 1");
  }
  if (!(rho0 > 0.0 && rho0 <= 1.0)) {
    throw ConfigError("pruning: rho0 must lie in (0, 1]");
  }
  if (!(delta_rho >= 0.0)) {
    throw ConfigError("pruning: delta_rho must be non-negative");
  }
  const double last_rho =
      rho0 - static_cast<double>(n_events - 1) * delta_rho;
  if (!(last_rho > 0.0)) {
    throw ConfigError(
        "pruning: rho0 - (n_events - 1) * delta_rho must stay positive, got " +
        std::to_string(last_rho));
  }
  if (!(first_event_frac > 0.0 && first_event_frac < 1.0)) {
    throw ConfigError("pruning: first_event_frac must lie in (0, 1)");
  }
}

std::vector<PruningEvent> pruning_schedule(const PruningConfig& config,
                                           std::uint64_t n_generations) {
  config.validate();
  if (!config.enabled) return {};
  if (n_generations == 0) {
    throw ConfigError("pruning: schedule needs a positive generation horizon");
  }

  const auto first = static_cast<std::uint64_t>(
      std::floor(config.first_event_frac * static_cast<double>(n_generations)));
  const std::uint64_t spacing =
      (n_generations - first) / static_cast<std::uint64_t>(config.n_events);
  if (first == 0) {
    throw ConfigError("pruning: first event would fall before generation 1");
  }
  if (config.n_events > 1 && spacing == 0) {
    throw ConfigError("pruning: events collide; horizon too short for " +
                      std::to_string(config.n_events) + " events");
  }

  std::vector<PruningEvent> events;
  events.reserve(config.n_events);
  for (std::size_t i = 0; i < config.n_events; ++i) {
    PruningEvent event;
    event.generation = first + static_cast<std::uint64_t>(i) * spacing;
    event.rho = config.rho0 - static_cast<double>(i) * config.delta_rho;
    if (event.generation >= n_generations) {
      throw ConfigError("pruning: event " + std::to_string(i) +
                        " at generation " + std::to_string(event.generation) +
                        " leaves no room before the horizon " +
                        std::to_string(n_generations));
    }
    const auto cluster = static_cast<std::size_t>(
        std::floor(event.rho * static_cast<double>(config.n_runs)));
    if (cluster == 0) {
      throw ConfigError("pruning: event " + std::to_string(i) +
                        " with rho " + std::to_string(event.rho) + " and " +
                        std::to_string(config.n_runs) +
                        " runs keeps no best solution");
    }
    events.push_back(event);
  }
  return events;
}

PruneResult prune_bounds(const std::vector<std::vector<double>>& best_sorted,
                         double rho, const Bounds& original,
                         const Bounds& current) {
  const auto cluster = static_cast<std::size_t>(
      std::floor(rho * static_cast<double>(best_sorted.size())));
  if (cluster == 0 || best_sorted.empty()) {
    throw ConfigError("pruning: empty best cluster");
  }

  const std::size_t dim = original.dimension();
  std::vector<double> lo(dim), hi(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    double hull_lo = best_sorted[0][j];
    double hull_hi = best_sorted[0][j];
    for (std::size_t k = 1; k < cluster; ++k) {
      hull_lo = std::min(hull_lo, best_sorted[k][j]);
      hull_hi = std::max(hull_hi, best_sorted[k][j]);
    }
    const double relaxation = 0.5 * (1.0 - rho) * original.width(j);
    lo[j] = std::max(hull_lo - relaxation, current.lower()[j]);
    hi[j] = std::min(hull_hi + relaxation, current.upper()[j]);
    if (!(lo[j] < hi[j])) {
      return PruneResult{current, true};
    }
  }
  return PruneResult{Bounds(std::move(lo), std::move(hi)), false};
}

}  // namespace archevo
