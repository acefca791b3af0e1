#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "archevo/bounds.hpp"
#include "archevo/individual.hpp"

namespace archevo {

using Evaluator = std::function<double(std::span<const double>)>;

/// Equality constraint phi(x) = target, handled by relaxation into the
/// inequality |phi(x) - target| - tolerance <= 0.
struct EqualityConstraint {
  Evaluator evaluator;
  double target = 0.0;
  double tolerance = 1e-6;
};

/// Returns the relaxed inequality evaluator for an equality constraint.
/// Tolerance must be strictly positive.
Evaluator convert_equality(EqualityConstraint constraint);

/// A minimization problem: objective plus zero or more inequality
/// constraints, each feasible when its value is <= 0.
class Problem {
 public:
  Problem(std::string name, Bounds bounds, Evaluator objective,
          std::vector<Evaluator> constraints = {});

  const std::string& name() const { return name_; }
  const Bounds& bounds() const { return bounds_; }
  std::size_t dimension() const { return bounds_.dimension(); }
  const Evaluator& objective() const { return objective_; }
  const std::vector<Evaluator>& constraints() const { return constraints_; }
  bool constrained() const { return !constraints_.empty(); }

  void add_constraint(Evaluator constraint);
  void add_equality(EqualityConstraint constraint);

 private:
  std::string name_;
  Bounds bounds_;
  Evaluator objective_;
  std::vector<Evaluator> constraints_;
};

/// Evaluates the individual in place and increments the evaluation counter.
/// A non-finite objective or constraint value marks the point as failed:
/// both fitness and max_violation become +infinity, so selection discards
/// it against any successfully evaluated point.
void evaluate(const Problem& problem, Individual& individual,
              std::uint64_t& eval_count);

}  // namespace archevo
