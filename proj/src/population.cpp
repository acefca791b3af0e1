#include "archevo/population.hpp"

#include <string>

#include "archevo/errors.hpp"

namespace archevo {

Population init_population(const Problem& problem, const Bounds& box,
                           std::size_t size, const AdaptationConfig& adaptation,
                           int fixed_strategy, RandomSource& rng,
                           std::uint64_t& eval_count) {
  if (size < kMinPopulationSize) {
    throw ConfigError(
        "population_size " + std::to_string(size) + " is below the minimum " +
        std::to_string(kMinPopulationSize) +
        " required for the mutation strategies' distinct donor indices");
  }
  if (box.dimension() != problem.dimension()) {
    throw ConfigError("population box dimension " +
                      std::to_string(box.dimension()) +
                      " does not match problem dimension " +
                      std::to_string(problem.dimension()));
  }
  adaptation.validate();
  if (!adaptation.adapt_strategy && (fixed_strategy < 1 || fixed_strategy > 4)) {
    throw ConfigError("island strategy " + std::to_string(fixed_strategy) +
                      " is not in 1..4");
  }

  const std::size_t dim = box.dimension();
  Population population;
  population.generation = 0;
  population.members.resize(size);
  for (auto& member : population.members) {
    member.x.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      member.x[j] = box.lower()[j] + rng.next_double() * box.width(j);
    }
    member.strategy = fixed_strategy;
    init_params(member, adaptation, rng);
    evaluate(problem, member, eval_count);
  }
  return population;
}

}  // namespace archevo
