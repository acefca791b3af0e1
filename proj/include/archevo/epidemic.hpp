#pragma once

#include <cstdint>

#include "archevo/adaptation.hpp"
#include "archevo/bounds.hpp"
#include "archevo/individual.hpp"
#include "archevo/problem.hpp"
#include "archevo/rng.hpp"

namespace archevo {

/// Diversity-triggered partial restart ("epidemic").
struct EpidemicConfig {
  bool enabled = false;
  /// Diversity threshold; the epidemic fires when the population's mean
  /// pairwise normalized distance falls below it.
  double d_tol = 1e-3;
  /// Fraction of the population immune by rank (at least one member).
  double rho_elite = 0.1;
  /// Fraction of the non-immune members that get reinitialized.
  double rho_ill = 1.0;
  /// Minimum number of generations between two epidemics.
  std::uint64_t cooldown = 1000;
  /// Diversity is measured every `stride` generations.
  std::uint64_t stride = 1;
  /// Reinitialize over the original search box instead of the current
  /// (possibly pruned) one.
  bool reinit_original_bounds = false;

  void validate() const;
};

/// Mean pairwise Euclidean distance between members after normalizing each
/// coordinate by the width of `reference`. Lies in [0, sqrt(D)]; 0 for a
/// population of identical points. Throws ConfigError for populations of
/// fewer than two members, whose diversity is undefined.
double diversity_score(const Population& population, const Bounds& reference);

struct EpidemicOutcome {
  bool fired = false;
  std::size_t reinitialized = 0;
};

/// Fires an epidemic when diversity (passed in, measured against the
/// original bounds) is below d_tol and at least `cooldown` generations have
/// passed since the last one. The best floor(rho_elite * N_p) members
/// (minimum one) are immune; of the remaining pool, floor(rho_ill * pool)
/// members drawn uniformly without replacement are reinitialized over
/// `reinit_box` with fresh control parameters and evaluated immediately.
/// Updates last_epidemic_generation when it fires.
EpidemicOutcome maybe_epidemic(Population& population, double diversity,
                               const EpidemicConfig& config,
                               const AdaptationConfig& adaptation,
                               const Problem& problem, const Bounds& reinit_box,
                               double eps, std::uint64_t generation,
                               std::uint64_t& last_epidemic_generation,
                               RandomSource& rng, std::uint64_t& eval_count);

}  // namespace archevo
