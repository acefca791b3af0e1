#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "archevo/problem.hpp"

namespace archevo {

double sphere(std::span<const double> x);
/// Chained Rosenbrock, sum of 100 (x[j+1] - x[j]^2)^2 + (1 - x[j])^2.
double rosenbrock(std::span<const double> x);
/// 10 D + sum of x[j]^2 - 10 cos(2 pi x[j]).
double rastrigin(std::span<const double> x);

Problem make_sphere(std::size_t dimension);
Problem make_rosenbrock(std::size_t dimension);
Problem make_rastrigin(std::size_t dimension);
/// min x1^2 + x2^2 on [-10,10]^2 subject to x1 + x2 >= 1.
Problem make_constrained_quadratic();
/// min x1^2 + x2^2 on [-5,5]^2 subject to x1 + x2 = 2 within 1e-3.
Problem make_equality_demo();

struct BenchmarkSpec {
  std::string name;
  std::size_t dimension = 0;
  bool dimension_fixed = false;
  double default_lower = 0.0;
  double default_upper = 0.0;
  double known_optimum_f = 0.0;
  /// Empty when the optimizer location is not part of the contract.
  std::vector<double> known_optimizer;
};

const std::vector<BenchmarkSpec>& benchmark_specs();

/// Builds a registered benchmark by name. `dimension` overrides the default
/// for scalable problems and must be absent or equal for fixed ones;
/// unknown names and invalid dimensions raise ConfigError.
Problem make_problem(const std::string& name,
                     std::optional<std::size_t> dimension = std::nullopt);

}  // namespace archevo
