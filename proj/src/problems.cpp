#include "archevo/problems.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "archevo/errors.hpp"

namespace archevo {

double sphere(std::span<const double> x) {
  double total = 0.0;
  for (double v : x) total += v * v;
  return total;
}

double rosenbrock(std::span<const double> x) {
  if (x.size() < 2) {
    throw ConfigError("rosenbrock needs dimension >= 2");
  }
  double total = 0.0;
  for (std::size_t j = 0; j + 1 < x.size(); ++j) {
    const double a = x[j + 1] - x[j] * x[j];
    const double b = 1.0 - x[j];
    total += 100.0 * a * a + b * b;
  }
  return total;
}

double rastrigin(std::span<const double> x) {
  double total = 10.0 * static_cast<double>(x.size());
  for (double v : x) {
    total += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
  }
  return total;
}

Problem make_sphere(std::size_t dimension) {
  return Problem("sphere", uniform_bounds(dimension, -100.0, 100.0), sphere);
}

Problem make_rosenbrock(std::size_t dimension) {
  if (dimension < 2) {
    throw ConfigError("rosenbrock needs dimension >= 2");
  }
  return Problem("rosenbrock", uniform_bounds(dimension, -50.0, 50.0),
                 rosenbrock);
}

Problem make_rastrigin(std::size_t dimension) {
  return Problem("rastrigin", uniform_bounds(dimension, -5.12, 5.12),
                 rastrigin);
}

Problem make_constrained_quadratic() {
  Problem problem("constrained_quadratic", uniform_bounds(2, -10.0, 10.0),
                  sphere);
  problem.add_constraint(
      [](std::span<const double> x) { return 1.0 - x[0] - x[1]; });
  return problem;
}

Problem make_equality_demo() {
  Problem problem("equality_demo", uniform_bounds(2, -5.0, 5.0), sphere);
  problem.add_equality(EqualityConstraint{
      [](std::span<const double> x) { return x[0] + x[1]; }, 2.0, 1e-3});
  return problem;
}

const std::vector<BenchmarkSpec>& benchmark_specs() {
  static const std::vector<BenchmarkSpec> specs = [] {
    std::vector<BenchmarkSpec> list;
    list.push_back({"sphere", 10, false, -100.0, 100.0, 0.0,
                    std::vector<double>(10, 0.0)});
    list.push_back({"rosenbrock", 10, false, -50.0, 50.0, 0.0,
                    std::vector<double>(10, 1.0)});
    list.push_back({"rastrigin", 10, false, -5.12, 5.12, 0.0,
                    std::vector<double>(10, 0.0)});
    list.push_back({"constrained_quadratic", 2, true, -10.0, 10.0, 0.5,
                    std::vector<double>{0.5, 0.5}});
    list.push_back({"equality_demo", 2, true, -5.0, 5.0, 2.0,
                    std::vector<double>{1.0, 1.0}});
    return list;
  }();
  return specs;
}

Problem make_problem(const std::string& name,
                     std::optional<std::size_t> dimension) {
  for (const BenchmarkSpec& spec : benchmark_specs()) {
    if (spec.name != name) continue;
    if (spec.dimension_fixed) {
      if (dimension && *dimension != spec.dimension) {
        throw ConfigError("problem '" + name + "' has fixed dimension " +
                          std::to_string(spec.dimension));
      }
    }
    const std::size_t dim =
        spec.dimension_fixed ? spec.dimension : dimension.value_or(spec.dimension);
    if (name == "sphere") return make_sphere(dim);
    if (name == "rosenbrock") return make_rosenbrock(dim);
    if (name == "rastrigin") return make_rastrigin(dim);
    if (name == "constrained_quadratic") return make_constrained_quadratic();
    return make_equality_demo();
  }
  throw ConfigError("unknown problem '" + name + "'");
}

}  // namespace archevo
