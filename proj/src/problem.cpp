#include "archevo/problem.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "archevo/errors.hpp"

namespace archevo {

Evaluator convert_equality(EqualityConstraint constraint) {
  if (!constraint.evaluator) {
    throw ConfigError("equality constraint: missing evaluator");
  }
  if (!(constraint.tolerance > 0.0)) {
    throw ConfigError("equality constraint: tolerance must be positive");
  }
  return [fn = std::move(constraint.evaluator), target = constraint.target,
          tol = constraint.tolerance](std::span<const double> x) {
    return std::abs(fn(x) - target) - tol;
  };
}

Problem::Problem(std::string name, Bounds bounds, Evaluator objective,
                 std::vector<Evaluator> constraints)
    : name_(std::move(name)),
      bounds_(std::move(bounds)),
      objective_(std::move(objective)),
      constraints_(std::move(constraints)) {
  if (!objective_) {
    throw ConfigError("problem '" + name_ + "': missing objective");
  }
  for (const auto& c : constraints_) {
    if (!c) throw ConfigError("problem '" + name_ + "': empty constraint");
  }
}

void Problem::add_constraint(Evaluator constraint) {
  if (!constraint) {
    throw ConfigError("problem '" + name_ + "': empty constraint");
  }
  constraints_.push_back(std::move(constraint));
}

void Problem::add_equality(EqualityConstraint constraint) {
  constraints_.push_back(convert_equality(std::move(constraint)));
}

void evaluate(const Problem& problem, Individual& individual,
              std::uint64_t& eval_count) {
  ++eval_count;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  const double f = problem.objective()(individual.x);
  if (!std::isfinite(f)) {
    individual.fitness = kInf;
    individual.max_violation = kInf;
    individual.evaluated = true;
    return;
  }

  double psi = kNoViolation;
  for (const auto& constraint : problem.constraints()) {
    const double value = constraint(individual.x);
    if (!std::isfinite(value)) {
      individual.fitness = kInf;
      individual.max_violation = kInf;
      individual.evaluated = true;
      return;
    }
    psi = std::max(psi, value);
  }

  individual.fitness = f;
  individual.max_violation = psi;
  individual.evaluated = true;
}

}  // namespace archevo
