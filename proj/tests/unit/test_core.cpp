#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "archevo/bounds.hpp"
#include "archevo/errors.hpp"
#include "archevo/population.hpp"
#include "archevo/problem.hpp"
#include "archevo/rng.hpp"
#include "support/helpers.hpp"

using namespace archevo;
using archevo::testing::same_population;

namespace {

double sum_of_squares(std::span<const double> x) {
  double total = 0.0;
  for (double v : x) total += v * v;
  return total;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("bounds validate their shape") {
  CHECK_THROWS_AS(Bounds({0.0, 0.0}, {1.0}), ConfigError);
  CHECK_THROWS_AS(Bounds({}, {}), ConfigError);
  CHECK_THROWS_AS(Bounds({0.0}, {0.0}), ConfigError);   // zero width
  CHECK_THROWS_AS(Bounds({2.0}, {1.0}), ConfigError);   // inverted
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Bounds({0.0}, {inf}), ConfigError);

  const Bounds box({-1.0, 0.0}, {1.0, 4.0});
  CHECK(box.dimension() == 2);
  CHECK(box.width(0) == 2.0);
  CHECK(box.width(1) == 4.0);
  const std::vector<double> inside = {0.0, 2.0};
  const std::vector<double> outside = {0.0, 4.5};
  CHECK(box.contains(inside));
  CHECK_FALSE(box.contains(outside));
  CHECK(box == Bounds({-1.0, 0.0}, {1.0, 4.0}));
  CHECK(uniform_bounds(3, -5.0, 5.0) ==
        Bounds({-5.0, -5.0, -5.0}, {5.0, 5.0, 5.0}));
}

TEST_CASE("equality constraints relax into inequalities") {
  EqualityConstraint eq{[](std::span<const double> x) { return x[0]; }, 0.0,
                        0.1};
  Evaluator relaxed = convert_equality(eq);
  CHECK(relaxed(std::vector<double>{0.05}) == doctest::Approx(-0.05));
  CHECK(relaxed(std::vector<double>{0.3}) == doctest::Approx(0.2));
  CHECK(relaxed(std::vector<double>{0.0}) == doctest::Approx(-0.1));

  eq.tolerance = 0.0;
  CHECK_THROWS_AS(convert_equality(eq), ConfigError);
  eq.tolerance = -1.0;
  CHECK_THROWS_AS(convert_equality(eq), ConfigError);
}

TEST_CASE("evaluate fills fitness and the max violation") {
  std::uint64_t fes = 0;

  Problem sphere3("sphere", uniform_bounds(3, -1.0, 1.0), sum_of_squares);
  Individual at_origin;
  at_origin.x = {0.0, 0.0, 0.0};
  evaluate(sphere3, at_origin, fes);
  CHECK(fes == 1);
  CHECK(at_origin.evaluated);
  CHECK(at_origin.fitness == 0.0);
  CHECK(at_origin.max_violation == kNoViolation);

  Problem one_constraint(
      "c1", uniform_bounds(2, -10.0, 10.0), sum_of_squares,
      {[](std::span<const double> x) { return 1.0 - x[0] - x[1]; }});
  Individual shallow;
  shallow.x = {0.2, 0.2};
  evaluate(one_constraint, shallow, fes);
  CHECK(fes == 2);
  CHECK(shallow.max_violation == doctest::Approx(0.6));

  Problem two_constraints(
      "c2", uniform_bounds(2, -10.0, 10.0), sum_of_squares,
      {[](std::span<const double> x) { return 1.0 - x[0] - x[1]; },
       [](std::span<const double> x) { return x[0] - 5.0; }});
  Individual mixed;
  mixed.x = {6.0, 0.0};
  evaluate(two_constraints, mixed, fes);
  CHECK(mixed.max_violation == doctest::Approx(1.0));
}

TEST_CASE("non-finite evaluations become the worst possible point") {
  std::uint64_t fes = 0;
  const double inf = std::numeric_limits<double>::infinity();

  Problem bad_objective("bad_f", uniform_bounds(1, 0.0, 1.0),
                        [](std::span<const double>) {
                          return std::numeric_limits<double>::quiet_NaN();
                        });
  Individual a;
  a.x = {0.5};
  evaluate(bad_objective, a, fes);
  CHECK(a.fitness == inf);
  CHECK(a.max_violation == inf);

  Problem bad_constraint(
      "bad_c", uniform_bounds(1, 0.0, 1.0),
      [](std::span<const double>) { return 1.0; },
      {[](std::span<const double>) { return std::log(-1.0); }});
  Individual b;
  b.x = {0.5};
  evaluate(bad_constraint, b, fes);
  CHECK(b.fitness == inf);
  CHECK(b.max_violation == inf);
  CHECK(fes == 2);
}

TEST_CASE("initial populations sample the box uniformly") {
  Problem square("sq", uniform_bounds(2, 0.0, 1.0), sum_of_squares);
  AdaptationConfig adaptation;
  std::uint64_t fes = 0;
  RandomSource rng(3, 0);

  Population population = init_population(square, square.bounds(), 12,
                                          adaptation, 1, rng, fes);
  CHECK(population.generation == 0);
  CHECK(population.size() == 12);
  CHECK(fes == 12);
  for (const Individual& member : population.members) {
    CHECK(square.bounds().contains(member.x));
    CHECK(member.evaluated);
    CHECK(member.scale_factor >= adaptation.f_min);
    CHECK(member.scale_factor <= adaptation.f_max);
    CHECK(member.crossover_prob >= adaptation.cr_min);
    CHECK(member.crossover_prob <= adaptation.cr_max);
    CHECK(member.strategy == 1);
  }
}

TEST_CASE("a population below the strategy minimum is rejected") {
  Problem square("sq", uniform_bounds(2, 0.0, 1.0), sum_of_squares);
  AdaptationConfig adaptation;
  std::uint64_t fes = 0;
  RandomSource rng(3, 0);
  CHECK_THROWS_WITH_AS(
      init_population(square, square.bounds(), 4, adaptation, 1, rng, fes),
      doctest::Contains("5"), ConfigError);
}

TEST_CASE("the same seed reproduces the same population bit for bit") {
  Problem square("sq", uniform_bounds(3, -2.0, 2.0), sum_of_squares);
  AdaptationConfig adaptation;
  adaptation.adapt_strategy = true;

  std::uint64_t fes_a = 0;
  RandomSource rng_a(42, 0);
  Population a = init_population(square, square.bounds(), 10, adaptation, 1,
                                 rng_a, fes_a);
  std::uint64_t fes_b = 0;
  RandomSource rng_b(42, 0);
  Population b = init_population(square, square.bounds(), 10, adaptation, 1,
                                 rng_b, fes_b);
  CHECK(same_population(a, b));
}

TEST_CASE("init rejects a box that does not match the problem dimension") {
  Problem square("sq", uniform_bounds(2, 0.0, 1.0), sum_of_squares);
  AdaptationConfig adaptation;
  std::uint64_t fes = 0;
  RandomSource rng(1, 0);
  const Bounds wrong = uniform_bounds(3, 0.0, 1.0);
  CHECK_THROWS_AS(
      init_population(square, wrong, 8, adaptation, 1, rng, fes),
      ConfigError);
}

}  // TEST_SUITE
