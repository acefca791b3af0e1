#include "archevo/epidemic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "archevo/constraints.hpp"
#include "archevo/errors.hpp"

namespace archevo {

void EpidemicConfig::validate() const {
  if (!enabled) return;
  if (!(d_tol > 0.0)) {
    throw ConfigError("epidemic: d_tol must be positive");
  }
  if (!(rho_elite >= 0.0 && rho_elite <= 1.0)) {
    throw ConfigError("epidemic: rho_elite must lie in [0, 1]");
  }
  if (!(rho_ill >= 0.0 && rho_ill <= 1.0)) {
    throw ConfigError("epidemic: rho_ill must lie in [0, 1]");
  }
  if (stride == 0) {
    throw ConfigError("epidemic: stride must be at least 1");
  }
}

double diversity_score(const Population& population, const Bounds& reference) {
  const std::size_t size = population.members.size();
  if (size < 2) {
    throw ConfigError("diversity is undefined for fewer than two members");
  }
  const std::size_t dim = reference.dimension();

  double total = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    const auto& xi = population.members[i].x;
    for (std::size_t k = i + 1; k < size; ++k) {
      const auto& xk = population.members[k].x;
      double squared = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        const double delta = (xi[j] - xk[j]) / reference.width(j);
        squared += delta * delta;
      }
      total += std::sqrt(squared);
    }
  }
  const double pairs = 0.5 * static_cast<double>(size) *
                       static_cast<double>(size - 1);
  return total / pairs;
}

EpidemicOutcome maybe_epidemic(Population& population, double diversity,
                               const EpidemicConfig& config,
                               const AdaptationConfig& adaptation,
                               const Problem& problem, const Bounds& reinit_box,
                               double eps, std::uint64_t generation,
                               std::uint64_t& last_epidemic_generation,
                               RandomSource& rng, std::uint64_t& eval_count) {
  EpidemicOutcome outcome;
  if (!config.enabled) return outcome;
  if (!(diversity < config.d_tol)) return outcome;
  if (generation - last_epidemic_generation < config.cooldown) return outcome;

  const std::size_t size = population.members.size();
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return lex_less(population.members[a],
                                     population.members[b], eps);
                   });

  std::size_t n_immune = static_cast<std::size_t>(
      std::floor(config.rho_elite * static_cast<double>(size)));
  n_immune = std::clamp<std::size_t>(n_immune, 1, size);

  std::vector<bool> immune(size, false);
  for (std::size_t k = 0; k < n_immune; ++k) immune[order[k]] = true;

  std::vector<std::size_t> pool;
  pool.reserve(size - n_immune);
  for (std::size_t i = 0; i < size; ++i) {
    if (!immune[i]) pool.push_back(i);
  }

  const std::size_t n_ill = static_cast<std::size_t>(
      std::floor(config.rho_ill * static_cast<double>(pool.size())));
  for (std::size_t k = 0; k < n_ill; ++k) {
    const std::size_t pick = k + rng.next_index(pool.size() - k);
    std::swap(pool[k], pool[pick]);
  }

  for (std::size_t k = 0; k < n_ill; ++k) {
    Individual& member = population.members[pool[k]];
    for (std::size_t j = 0; j < reinit_box.dimension(); ++j) {
      member.x[j] = reinit_box.lower()[j] + rng.next_double() * reinit_box.width(j);
    }
    init_params(member, adaptation, rng);
    evaluate(problem, member, eval_count);
  }

  last_epidemic_generation = generation;
  outcome.fired = true;
  outcome.reinitialized = n_ill;
  return outcome;
}

}  // namespace archevo
