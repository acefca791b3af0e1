#pragma once

#include <cstdint>

#include "archevo/individual.hpp"

namespace archevo {

/// Exponentially decaying relaxation level for constraint handling.
///
/// The level stays at eps0 through generation n0, decays geometrically to
/// eps_inf at generation n_inf, and stays there afterwards.
struct EpsilonSchedule {
  double eps0 = 1.0;
  double eps_inf = 1e-8;
  std::uint64_t n0 = 0;
  std::uint64_t n_inf = 1;

  /// Throws ConfigError unless 0 < eps_inf <= eps0 and n0 < n_inf.
  void validate() const;
};

double epsilon_level(const EpsilonSchedule& schedule, std::uint64_t generation);

/// Strict lexicographic order under relaxation level eps: a precedes b when
/// a is clearly the better point. Members with violation <= eps count as
/// feasible and compare by fitness; a feasible member beats an infeasible
/// one; two infeasible members compare by violation. Exact ties in the
/// deciding key leave the order undecided (returns false both ways).
bool lex_less(const Individual& a, const Individual& b, double eps);

/// Survivor selection: the trial replaces the target unless the target is
/// strictly better, so ties go to the trial.
bool trial_wins(const Individual& trial, const Individual& target, double eps);

/// Index of the best member under eps; the lowest index wins ties.
std::size_t best_index(const Population& population, double eps);

}  // namespace archevo
