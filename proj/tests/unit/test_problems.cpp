#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "archevo/errors.hpp"
#include "archevo/problems.hpp"
#include "archevo/rng.hpp"

using namespace archevo;

namespace {

struct Scored {
  double fitness;
  double violation;
};

Scored score(const Problem& problem, std::vector<double> x) {
  Individual member;
  member.x = std::move(x);
  std::uint64_t fes = 0;
  evaluate(problem, member, fes);
  return {member.fitness, member.max_violation};
}

}  // namespace

TEST_SUITE("problems") {

TEST_CASE("sphere values") {
  CHECK(sphere(std::vector<double>{0.0, 0.0, 0.0}) == 0.0);
  CHECK(sphere(std::vector<double>{1.0, 1.0}) == 2.0);
  CHECK(sphere(std::vector<double>{-3.0}) == 9.0);
}

TEST_CASE("rosenbrock values") {
  CHECK(rosenbrock(std::vector<double>(5, 1.0)) == 0.0);
  CHECK(rosenbrock(std::vector<double>{0.0, 0.0}) == 1.0);
  CHECK(rosenbrock(std::vector<double>{-1.0, 1.0}) == 4.0);
  CHECK_THROWS_AS(make_rosenbrock(1), ConfigError);
}

TEST_CASE("rastrigin values") {
  CHECK(rastrigin(std::vector<double>(30, 0.0)) == 0.0);
  CHECK(rastrigin(std::vector<double>{1.0, 1.0}) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rastrigin(std::vector<double>{0.5}) ==
        doctest::Approx(20.25).epsilon(1e-12));
}

TEST_CASE("the constrained quadratic rewards the active constraint") {
  Problem problem = make_constrained_quadratic();
  CHECK(problem.dimension() == 2);
  CHECK(problem.constrained());

  const Scored optimum = score(problem, {0.5, 0.5});
  CHECK(optimum.fitness == 0.5);
  CHECK(optimum.violation == 0.0);

  const Scored interior = score(problem, {1.0, 1.0});
  CHECK(interior.fitness == 2.0);
  CHECK(interior.violation == -1.0);

  const Scored origin = score(problem, {0.0, 0.0});
  CHECK(origin.fitness == 0.0);
  CHECK(origin.violation == 1.0);
}

TEST_CASE("no feasible grid point beats the constrained optimum") {
  Problem problem = make_constrained_quadratic();
  double best = std::numeric_limits<double>::infinity();
  // Coarse sweep of the whole box; the grid passes through (0.5, 0.5).
  for (int i = -200; i <= 200; ++i) {
    for (int j = -200; j <= 200; ++j) {
      const double x = i * 0.05;
      const double y = j * 0.05;
      if (1.0 - x - y > 0.0) continue;
      const double f = x * x + y * y;
      if (f < best) best = f;
    }
  }
  CHECK(best == doctest::Approx(0.5).epsilon(1e-12));

  // Fine sweep around the optimum at step 1e-3.
  best = std::numeric_limits<double>::infinity();
  for (int i = 300; i <= 700; ++i) {
    for (int j = 300; j <= 700; ++j) {
      const double x = i * 1e-3;
      const double y = j * 1e-3;
      if (1.0 - x - y > 0.0) continue;
      const double f = x * x + y * y;
      if (f < best) best = f;
    }
  }
  CHECK(best == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("the equality demo relaxes onto the target line") {
  Problem problem = make_equality_demo();
  const double delta = 1e-3;

  const Scored on_line = score(problem, {2.0, 0.0});
  CHECK(on_line.violation == doctest::Approx(-delta));

  const Scored origin = score(problem, {0.0, 0.0});
  CHECK(origin.violation == doctest::Approx(2.0 - delta));

  const Scored optimum = score(problem, {1.0, 1.0});
  CHECK(optimum.fitness == 2.0);
  CHECK(optimum.violation == doctest::Approx(-delta));

  // Grid over the feasible band |x1 + x2 - 2| <= delta: the minimum is
  // (2 - delta)^2 / 2, within O(delta) of the reported optimum 2.
  double best = std::numeric_limits<double>::infinity();
  for (int i = -5000; i <= 5000; ++i) {
    const double t = i * 1e-3;
    for (double sum : {2.0 - delta, 2.0, 2.0 + delta}) {
      const double u = sum - t;
      if (t < -5.0 || t > 5.0 || u < -5.0 || u > 5.0) continue;
      const Scored point = score(problem, {t, u});
      REQUIRE(point.violation <= 1e-12);
      if (point.fitness < best) best = point.fitness;
    }
  }
  // The grid (step 1e-3) cannot land on the true minimizer t = (2 - delta)/2,
  // so allow the O(step^2) resolution error from above.
  const double analytic = (2.0 - delta) * (2.0 - delta) / 2.0;
  CHECK(best >= analytic - 1e-12);
  CHECK(best == doctest::Approx(analytic).epsilon(1e-6));
  CHECK(std::abs(best - 2.0) <= 3.0 * delta);
}

TEST_CASE("every registered optimizer reproduces its registered optimum") {
  for (const BenchmarkSpec& spec : benchmark_specs()) {
    CAPTURE(spec.name);
    if (spec.known_optimizer.empty()) continue;
    Problem problem = make_problem(spec.name);
    const Scored at_optimum = score(problem, spec.known_optimizer);
    CHECK(at_optimum.fitness ==
          doctest::Approx(spec.known_optimum_f).epsilon(1e-12));
    CHECK(at_optimum.violation <= 0.0);
  }
}

TEST_CASE("benchmark evaluators are finite over their boxes") {
  RandomSource rng(2718, 0);
  for (const BenchmarkSpec& spec : benchmark_specs()) {
    CAPTURE(spec.name);
    Problem problem = make_problem(spec.name);
    const Bounds& box = problem.bounds();
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<double> x(problem.dimension());
      for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = rng.next_in(box.lower()[j], box.upper()[j]);
      }
      const Scored point = score(problem, x);
      REQUIRE(std::isfinite(point.fitness));
      REQUIRE((point.violation == kNoViolation ||
               std::isfinite(point.violation)));
    }
  }
}

TEST_CASE("the registry resolves names and dimensions") {
  CHECK_THROWS_AS(make_problem("does_not_exist"), ConfigError);
  CHECK(make_problem("sphere").dimension() == 10);
  CHECK(make_problem("sphere", 3).dimension() == 3);
  CHECK(make_problem("rastrigin", 30).bounds() ==
        uniform_bounds(30, -5.12, 5.12));
  CHECK(make_problem("rosenbrock", 100).bounds() ==
        uniform_bounds(100, -50.0, 50.0));
  CHECK(make_problem("constrained_quadratic").dimension() == 2);
  CHECK_THROWS_AS(make_problem("constrained_quadratic", 3), ConfigError);
  CHECK(make_problem("equality_demo", 2).dimension() == 2);
}

}  // TEST_SUITE
