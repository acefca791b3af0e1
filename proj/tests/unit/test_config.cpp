#include <doctest.h>

#include <string>
#include <vector>

#include "archevo/config.hpp"
#include "archevo/errors.hpp"

#include <json.hpp>

using namespace archevo;
using nlohmann::json;

namespace {

json minimal() {
  return json{{"problem", {{"name", "sphere"}}},
              {"termination", {{"max_generations", 5}}}};
}

std::string error_of(const json& source) {
  try {
    parse_config(source, "test");
  } catch (const ConfigError& error) {
    return error.what();
  }
  return "";
}

std::vector<int> strategies_of(const ExperimentConfig& config) {
  std::vector<int> strategies;
  for (const IslandSpec& spec : config.run.islands) {
    strategies.push_back(spec.strategy);
  }
  return strategies;
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("a minimal config fills in every default") {
  ExperimentConfig config = parse_config(minimal(), "test");
  CHECK(config.name == "experiment");
  CHECK(config.problem.name == "sphere");
  CHECK_FALSE(config.problem.dimension.has_value());
  CHECK(config.seeds == std::vector<std::uint64_t>{1});
  CHECK(config.output_dir == ".");
  CHECK(config.run.workers == 1);
  REQUIRE(config.run.islands.size() == 1);
  const IslandSpec& island = config.run.islands.front();
  CHECK(island.population_size == 64);
  CHECK(island.adaptation.adapt_strategy);
  CHECK(island.strategy == 0);
  CHECK(island.adaptation.tau == 0.1);
  CHECK_FALSE(island.epidemic.enabled);
  CHECK_FALSE(config.run.pruning.enabled);
  CHECK(config.run.topology.kind == TopologyKind::kRing);
  CHECK(config.run.termination.max_generations == 5);
  CHECK_FALSE(config.run.epsilon.eps0.has_value());
}

TEST_CASE("unknown keys are rejected by path") {
  json top = minimal();
  top["surprise"] = 1;
  CHECK(error_of(top) == "test.surprise: unknown key");

  json nested = minimal();
  nested["problem"]["wat"] = true;
  CHECK(error_of(nested) == "problem.wat: unknown key");

  json deep = minimal();
  deep["adaptation"] = {{"tua", 0.1}};
  CHECK(error_of(deep) == "adaptation.tua: unknown key");
}

TEST_CASE("required sections and fields") {
  CHECK(error_of(json{{"termination", {{"max_generations", 5}}}}) ==
        "problem: missing section");
  CHECK(error_of(json{{"problem", {{"name", "sphere"}}}}) ==
        "termination: missing section");
  json unnamed = minimal();
  unnamed["problem"].erase("name");
  CHECK(error_of(unnamed) == "problem.name: required");
  json unknown = minimal();
  unknown["problem"]["name"] = "warp_field";
  CHECK_THROWS_AS(parse_config(unknown, "test"), ConfigError);
  json no_criteria = minimal();
  no_criteria["termination"] = json::object();
  CHECK_THROWS_AS(parse_config(no_criteria, "test"), ConfigError);
}

TEST_CASE("population sizes below the donor-index minimum are named") {
  json source = minimal();
  source["islands"] = {{"population_size", 4}};
  const std::string message = error_of(source);
  CHECK(message.find("below the minimum 5") != std::string::npos);
}

TEST_CASE("section validation surfaces as ConfigError") {
  json epidemic = minimal();
  epidemic["epidemic"] = {{"rho_elite", 2.0}};
  CHECK_THROWS_AS(parse_config(epidemic, "test"), ConfigError);

  json migration = minimal();
  migration["migration"] = {{"probability", 1.5}};
  CHECK_THROWS_AS(parse_config(migration, "test"), ConfigError);

  json workers = minimal();
  workers["workers"] = 0;
  CHECK(error_of(workers) == "workers: must be at least 1");

  json topology = minimal();
  topology["islands"] = {{"count", 6}};
  topology["topology"] = {{"kind", "radial"}};
  CHECK_THROWS_AS(parse_config(topology, "test"), ConfigError);

  json kind = minimal();
  kind["topology"] = {{"kind", "moebius"}};
  CHECK(error_of(kind) == "topology.kind: unknown topology 'moebius'");
}

TEST_CASE("strategy requests must be consistent") {
  json both = minimal();
  both["islands"] = {{"strategy", 2}, {"strategies", {2}}};
  CHECK(error_of(both) == "islands: give either strategy or strategies");

  json adaptive_off = minimal();
  adaptive_off["islands"] = {{"strategy", "adaptive"}};
  adaptive_off["adaptation"] = {{"adapt_strategy", false}};
  CHECK_THROWS_AS(parse_config(adaptive_off, "test"), ConfigError);

  json pinned_on = minimal();
  pinned_on["islands"] = {{"strategy", 2}};
  pinned_on["adaptation"] = {{"adapt_strategy", true}};
  CHECK_THROWS_AS(parse_config(pinned_on, "test"), ConfigError);

  json wrong_count = minimal();
  wrong_count["islands"] = {{"count", 3}, {"strategies", {1, 2}}};
  CHECK_THROWS_AS(parse_config(wrong_count, "test"), ConfigError);

  json out_of_range = minimal();
  out_of_range["islands"] = {{"strategy", 7}};
  CHECK_THROWS_AS(parse_config(out_of_range, "test"), ConfigError);

  json pinned = minimal();
  pinned["islands"] = {{"count", 3}, {"strategy", 2}};
  ExperimentConfig config = parse_config(pinned, "test");
  CHECK(strategies_of(config) == std::vector<int>{2, 2, 2});
  CHECK_FALSE(config.run.islands.front().adaptation.adapt_strategy);
}

TEST_CASE("archipelagos default to pinned strategies by position") {
  json eight = minimal();
  eight["islands"] = {{"count", 8}};
  ExperimentConfig radial = parse_config(eight, "test");
  CHECK(radial.run.topology.kind == TopologyKind::kRadial);
  CHECK(radial.run.topology.rings == 4);
  CHECK(strategies_of(radial) == std::vector<int>{1, 1, 3, 3, 2, 2, 4, 4});

  json six = minimal();
  six["islands"] = {{"count", 6}};
  ExperimentConfig ring = parse_config(six, "test");
  CHECK(ring.run.topology.kind == TopologyKind::kRing);
  CHECK(strategies_of(ring) == std::vector<int>{1, 3, 2, 4, 1, 3});
}

TEST_CASE("epsilon accepts a number or the auto marker") {
  json automatic = minimal();
  automatic["epsilon"] = {{"eps0", "auto"}, {"eps_inf", 1e-6}};
  ExperimentConfig config = parse_config(automatic, "test");
  CHECK_FALSE(config.run.epsilon.eps0.has_value());
  CHECK(config.run.epsilon.eps_inf == 1e-6);

  json numeric = minimal();
  numeric["epsilon"] = {{"eps0", 5.0}, {"n0", 10}, {"n_inf", 40}};
  config = parse_config(numeric, "test");
  CHECK(config.run.epsilon.eps0 == 5.0);
  CHECK(config.run.epsilon.n0 == 10);
  CHECK(config.run.epsilon.n_inf == 40);

  json bad = minimal();
  bad["epsilon"] = {{"eps0", "big"}};
  CHECK_THROWS_AS(parse_config(bad, "test"), ConfigError);
}

TEST_CASE("pruning defaults its run count to the island count") {
  json implicit = minimal();
  implicit["islands"] = {{"count", 4}};
  implicit["pruning"] = json::object();
  ExperimentConfig config = parse_config(implicit, "test");
  CHECK(config.run.pruning.enabled);
  CHECK(config.run.pruning.n_runs == 4);

  json explicit_runs = minimal();
  explicit_runs["islands"] = {{"count", 4}};
  explicit_runs["pruning"] = {{"n_runs", 12}};
  config = parse_config(explicit_runs, "test");
  CHECK(config.run.pruning.n_runs == 12);
}

TEST_CASE("seeds must be a non-empty list of non-negative integers") {
  json explicit_seeds = minimal();
  explicit_seeds["seeds"] = {3, 5, 7};
  CHECK(parse_config(explicit_seeds, "test").seeds ==
        std::vector<std::uint64_t>{3, 5, 7});

  json empty = minimal();
  empty["seeds"] = json::array();
  CHECK(error_of(empty) == "seeds: must not be empty");

  json negative = minimal();
  negative["seeds"] = {1, -2};
  CHECK(error_of(negative) == "seeds: expected non-negative integers");
}

TEST_CASE("emit then parse is the identity on resolved configs") {
  json source = minimal();
  source["name"] = "roundtrip";
  source["problem"] = {{"name", "rastrigin"}, {"dimension", 12}};
  source["islands"] = {{"count", 8}, {"population_size", 32}};
  source["migration"] = {{"interval", 50}, {"probability", 0.25}};
  source["epidemic"] = {{"d_tol", 0.01}, {"cooldown", 200}};
  source["pruning"] = {{"rho0", 0.4}, {"delta_rho", 0.05}, {"n_events", 2}};
  source["epsilon"] = {{"eps0", "auto"}, {"n0", 2}, {"n_inf", 5}};
  source["termination"] = {{"max_generations", 9}, {"max_fes", 4096}};
  source["seeds"] = {11, 13};
  source["workers"] = 3;

  ExperimentConfig first = parse_config(source, "test");
  json emitted = emit_config(first);
  ExperimentConfig second = parse_config(emitted, "emitted");
  CHECK(emit_config(second) == emitted);
  CHECK(second.run.pruning.n_runs == first.run.pruning.n_runs);
  CHECK(strategies_of(second) == strategies_of(first));
}

}  // TEST_SUITE
