#include "archevo/constraints.hpp"

#include <cmath>

#include "archevo/errors.hpp"

namespace archevo {

void EpsilonSchedule::validate() const {
  if (!(eps_inf > 0.0)) {
    throw ConfigError("epsilon schedule: eps_inf must be positive");
  }
  if (!(eps0 >= eps_inf)) {
    throw ConfigError("epsilon schedule: eps0 must be at least eps_inf");
  }
  if (!std::isfinite(eps0)) {
    throw ConfigError("epsilon schedule: eps0 must be finite");
  }
  if (!(n0 < n_inf)) {
    throw ConfigError("epsilon schedule: n0 must be smaller than n_inf");
  }
}

double epsilon_level(const EpsilonSchedule& schedule, std::uint64_t generation) {
  if (generation <= schedule.n0) return schedule.eps0;
  if (generation >= schedule.n_inf) return schedule.eps_inf;
  const double progress =
      static_cast<double>(generation - schedule.n0) /
      static_cast<double>(schedule.n_inf - schedule.n0);
  return schedule.eps0 *
         std::pow(schedule.eps_inf / schedule.eps0, progress);
}

bool lex_less(const Individual& a, const Individual& b, double eps) {
  const bool a_ok = a.max_violation <= eps;
  const bool b_ok = b.max_violation <= eps;
  if (a_ok && b_ok) return a.fitness < b.fitness;
  if (a_ok != b_ok) return a_ok;
  return a.max_violation < b.max_violation;
}

bool trial_wins(const Individual& trial, const Individual& target, double eps) {
  return !lex_less(target, trial, eps);
}

std::size_t best_index(const Population& population, double eps) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.members.size(); ++i) {
    if (lex_less(population.members[i], population.members[best], eps)) {
      best = i;
    }
  }
  return best;
}

}  // namespace archevo
