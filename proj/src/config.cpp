#include "archevo/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <string>

#include "archevo/errors.hpp"
#include "archevo/problems.hpp"

namespace archevo {

namespace {

using nlohmann::json;

std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

void expect_object(const json& value, const std::string& path) {
  if (!value.is_object()) {
    throw ConfigError(path + ": expected an object");
  }
}

void check_keys(const json& object, const std::set<std::string>& allowed,
                const std::string& path) {
  for (const auto& item : object.items()) {
    if (!allowed.count(item.key())) {
      throw ConfigError(join_path(path, item.key()) + ": unknown key");
    }
  }
}

double get_double(const json& object, const std::string& key,
                  const std::string& path, double fallback) {
  if (!object.contains(key)) return fallback;
  const json& value = object.at(key);
  if (!value.is_number()) {
    throw ConfigError(join_path(path, key) + ": expected a number");
  }
  return value.get<double>();
}

bool is_non_negative_integer(const json& value) {
  if (value.is_number_unsigned()) return true;
  return value.is_number_integer() && value.get<std::int64_t>() >= 0;
}

std::uint64_t get_uint(const json& object, const std::string& key,
                       const std::string& path, std::uint64_t fallback) {
  if (!object.contains(key)) return fallback;
  const json& value = object.at(key);
  if (!is_non_negative_integer(value)) {
    throw ConfigError(join_path(path, key) +
                      ": expected a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

bool get_bool(const json& object, const std::string& key,
              const std::string& path, bool fallback) {
  if (!object.contains(key)) return fallback;
  const json& value = object.at(key);
  if (!value.is_boolean()) {
    throw ConfigError(join_path(path, key) + ": expected a boolean");
  }
  return value.get<bool>();
}

std::string get_string(const json& object, const std::string& key,
                       const std::string& path, const std::string& fallback) {
  if (!object.contains(key)) return fallback;
  const json& value = object.at(key);
  if (!value.is_string()) {
    throw ConfigError(join_path(path, key) + ": expected a string");
  }
  return value.get<std::string>();
}

AdaptationConfig parse_adaptation(const json& object, const std::string& path,
                                  std::optional<bool>& adapt_strategy_key) {
  expect_object(object, path);
  check_keys(object,
             {"f_min", "f_max", "cr_min", "cr_max", "tau", "adapt_strategy",
              "strategy_pool"},
             path);
  AdaptationConfig config;
  config.f_min = get_double(object, "f_min", path, config.f_min);
  config.f_max = get_double(object, "f_max", path, config.f_max);
  config.cr_min = get_double(object, "cr_min", path, config.cr_min);
  config.cr_max = get_double(object, "cr_max", path, config.cr_max);
  config.tau = get_double(object, "tau", path, config.tau);
  if (object.contains("adapt_strategy")) {
    adapt_strategy_key = get_bool(object, "adapt_strategy", path, false);
  }
  if (object.contains("strategy_pool")) {
    const json& pool = object.at("strategy_pool");
    if (!pool.is_array() || pool.empty()) {
      throw ConfigError(join_path(path, "strategy_pool") +
                        ": expected a non-empty array");
    }
    config.strategy_pool.clear();
    for (const json& entry : pool) {
      if (!entry.is_number_integer()) {
        throw ConfigError(join_path(path, "strategy_pool") +
                          ": expected integers");
      }
      config.strategy_pool.push_back(entry.get<int>());
    }
  }
  return config;
}

EpidemicConfig parse_epidemic(const json& object, const std::string& path) {
  expect_object(object, path);
  check_keys(object,
             {"enabled", "d_tol", "rho_elite", "rho_ill", "cooldown", "stride",
              "reinit_original_bounds"},
             path);
  EpidemicConfig config;
  config.enabled = get_bool(object, "enabled", path, true);
  config.d_tol = get_double(object, "d_tol", path, config.d_tol);
  config.rho_elite = get_double(object, "rho_elite", path, config.rho_elite);
  config.rho_ill = get_double(object, "rho_ill", path, config.rho_ill);
  config.cooldown = get_uint(object, "cooldown", path, config.cooldown);
  config.stride = get_uint(object, "stride", path, config.stride);
  config.reinit_original_bounds = get_bool(object, "reinit_original_bounds",
                                           path, config.reinit_original_bounds);
  config.validate();
  return config;
}

PruningConfig parse_pruning(const json& object, const std::string& path) {
  expect_object(object, path);
  check_keys(object,
             {"enabled", "n_runs", "rho0", "delta_rho", "n_events",
              "first_event_frac"},
             path);
  PruningConfig config;
  config.enabled = get_bool(object, "enabled", path, true);
  config.n_runs = static_cast<std::size_t>(
      get_uint(object, "n_runs", path, config.n_runs));
  config.rho0 = get_double(object, "rho0", path, config.rho0);
  config.delta_rho = get_double(object, "delta_rho", path, config.delta_rho);
  config.n_events = static_cast<std::size_t>(
      get_uint(object, "n_events", path, config.n_events));
  config.first_event_frac =
      get_double(object, "first_event_frac", path, config.first_event_frac);
  config.validate();
  return config;
}

MigrationConfig parse_migration(const json& object, const std::string& path) {
  expect_object(object, path);
  check_keys(object, {"interval", "probability", "fraction"}, path);
  MigrationConfig config;
  config.interval = get_uint(object, "interval", path, config.interval);
  config.probability =
      get_double(object, "probability", path, config.probability);
  config.fraction = get_double(object, "fraction", path, config.fraction);
  config.validate();
  return config;
}

Topology parse_topology(const json& object, const std::string& path,
                        std::size_t n_islands, bool explicit_topology) {
  Topology topology;
  topology.n_islands = n_islands;
  if (!explicit_topology) {
    topology.kind = (n_islands > 1 && n_islands % 4 == 0) ? TopologyKind::kRadial
                                                          : TopologyKind::kRing;
    if (topology.kind == TopologyKind::kRadial) topology.rings = 4;
    return topology;
  }
  expect_object(object, path);
  check_keys(object, {"kind", "rings"}, path);
  const std::string kind = get_string(object, "kind", path, "ring");
  if (kind == "radial") {
    topology.kind = TopologyKind::kRadial;
  } else if (kind == "ring") {
    topology.kind = TopologyKind::kRing;
  } else if (kind == "fully_connected") {
    topology.kind = TopologyKind::kFullyConnected;
  } else {
    throw ConfigError(join_path(path, "kind") + ": unknown topology '" + kind +
                      "'");
  }
  topology.rings = static_cast<std::size_t>(
      get_uint(object, "rings", path, topology.rings));
  topology.validate();
  return topology;
}

EpsilonSettings parse_epsilon(const json& object, const std::string& path) {
  expect_object(object, path);
  check_keys(object, {"eps0", "eps_inf", "n0", "n_inf"}, path);
  EpsilonSettings settings;
  if (object.contains("eps0") && !object.at("eps0").is_string()) {
    settings.eps0 = get_double(object, "eps0", path, 0.0);
  } else if (object.contains("eps0")) {
    const std::string text = get_string(object, "eps0", path, "auto");
    if (text != "auto") {
      throw ConfigError(join_path(path, "eps0") +
                        ": expected a number or \"auto\"");
    }
  }
  settings.eps_inf = get_double(object, "eps_inf", path, settings.eps_inf);
  if (object.contains("n0")) settings.n0 = get_uint(object, "n0", path, 0);
  if (object.contains("n_inf")) {
    settings.n_inf = get_uint(object, "n_inf", path, 0);
  }
  return settings;
}

TerminationCriteria parse_termination(const json& object,
                                      const std::string& path) {
  expect_object(object, path);
  check_keys(object, {"max_generations", "max_fes", "max_stall_generations"},
             path);
  TerminationCriteria criteria;
  if (object.contains("max_generations")) {
    criteria.max_generations = get_uint(object, "max_generations", path, 0);
  }
  if (object.contains("max_fes")) {
    criteria.max_fes = get_uint(object, "max_fes", path, 0);
  }
  if (object.contains("max_stall_generations")) {
    criteria.max_stall_generations =
        get_uint(object, "max_stall_generations", path, 0);
  }
  criteria.validate();
  return criteria;
}

constexpr std::array<int, 4> kDefaultStrategyPattern = {1, 3, 2, 4};

std::vector<int> default_strategies(const Topology& topology) {
  std::vector<int> strategies(topology.n_islands);
  if (topology.kind == TopologyKind::kRadial) {
    const std::size_t spokes = topology.n_islands / topology.rings;
    for (std::size_t i = 0; i < topology.n_islands; ++i) {
      strategies[i] = kDefaultStrategyPattern[(i / spokes) % 4];
    }
  } else {
    for (std::size_t i = 0; i < topology.n_islands; ++i) {
      strategies[i] = kDefaultStrategyPattern[i % 4];
    }
  }
  return strategies;
}

}  // namespace

ExperimentConfig parse_config(const json& source, const std::string& source_name) {
  expect_object(source, source_name);
  check_keys(source,
             {"name", "problem", "islands", "topology", "migration",
              "adaptation", "epidemic", "pruning", "epsilon", "termination",
              "seeds", "output_dir", "workers"},
             source_name);

  ExperimentConfig config;
  config.name = get_string(source, "name", "", "experiment");

  if (!source.contains("problem")) {
    throw ConfigError("problem: missing section");
  }
  const json& problem = source.at("problem");
  expect_object(problem, "problem");
  check_keys(problem, {"name", "dimension"}, "problem");
  config.problem.name = get_string(problem, "name", "problem", "");
  if (config.problem.name.empty()) {
    throw ConfigError("problem.name: required");
  }
  if (problem.contains("dimension")) {
    config.problem.dimension = static_cast<std::size_t>(
        get_uint(problem, "dimension", "problem", 0));
  }
  make_problem(config.problem.name, config.problem.dimension);

  std::size_t n_islands = 1;
  std::size_t population_size = 64;
  std::optional<int> fixed_strategy;
  std::vector<int> strategies;
  bool adaptive_requested = false;
  if (source.contains("islands")) {
    const json& islands = source.at("islands");
    expect_object(islands, "islands");
    check_keys(islands, {"count", "population_size", "strategy", "strategies"},
               "islands");
    n_islands =
        static_cast<std::size_t>(get_uint(islands, "count", "islands", 1));
    population_size = static_cast<std::size_t>(
        get_uint(islands, "population_size", "islands", population_size));
    if (islands.contains("strategy") && islands.contains("strategies")) {
      throw ConfigError("islands: give either strategy or strategies");
    }
    if (islands.contains("strategy")) {
      const json& strategy = islands.at("strategy");
      if (strategy.is_string()) {
        if (strategy.get<std::string>() != "adaptive") {
          throw ConfigError(
              "islands.strategy: expected an integer or \"adaptive\"");
        }
        adaptive_requested = true;
      } else if (strategy.is_number_integer()) {
        fixed_strategy = strategy.get<int>();
      } else {
        throw ConfigError(
            "islands.strategy: expected an integer or \"adaptive\"");
      }
    }
    if (islands.contains("strategies")) {
      const json& list = islands.at("strategies");
      if (!list.is_array()) {
        throw ConfigError("islands.strategies: expected an array");
      }
      for (const json& entry : list) {
        if (!entry.is_number_integer()) {
          throw ConfigError("islands.strategies: expected integers");
        }
        strategies.push_back(entry.get<int>());
      }
      if (strategies.size() != n_islands) {
        throw ConfigError("islands.strategies: expected " +
                          std::to_string(n_islands) + " entries, got " +
                          std::to_string(strategies.size()));
      }
    }
  }
  if (n_islands == 0) {
    throw ConfigError("islands.count: must be at least 1");
  }

  std::optional<bool> adapt_strategy_key;
  AdaptationConfig adaptation;
  if (source.contains("adaptation")) {
    adaptation =
        parse_adaptation(source.at("adaptation"), "adaptation",
                         adapt_strategy_key);
  }

  // Strategy mode resolution: an explicit request wins; otherwise single
  // islands self-adapt and archipelagos get fixed per-island strategies.
  bool adapt_strategy;
  if (adaptive_requested) {
    if (adapt_strategy_key && !*adapt_strategy_key) {
      throw ConfigError(
          "islands.strategy: \"adaptive\" conflicts with "
          "adaptation.adapt_strategy = false");
    }
    adapt_strategy = true;
  } else if (fixed_strategy || !strategies.empty()) {
    if (adapt_strategy_key && *adapt_strategy_key) {
      throw ConfigError(
          "adaptation.adapt_strategy: true conflicts with fixed island "
          "strategies");
    }
    adapt_strategy = false;
  } else if (adapt_strategy_key) {
    adapt_strategy = *adapt_strategy_key;
  } else {
    adapt_strategy = n_islands == 1;
  }
  adaptation.adapt_strategy = adapt_strategy;
  adaptation.validate();

  config.run.topology = parse_topology(
      source.contains("topology") ? source.at("topology") : json(), "topology",
      n_islands, source.contains("topology"));

  if (!adapt_strategy && !fixed_strategy && strategies.empty()) {
    strategies = default_strategies(config.run.topology);
  }

  if (source.contains("migration")) {
    config.run.migration = parse_migration(source.at("migration"), "migration");
  }

  EpidemicConfig epidemic;
  if (source.contains("epidemic")) {
    epidemic = parse_epidemic(source.at("epidemic"), "epidemic");
  }
  if (source.contains("pruning")) {
    config.run.pruning = parse_pruning(source.at("pruning"), "pruning");
    if (config.run.pruning.enabled && !source.at("pruning").contains("n_runs")) {
      config.run.pruning.n_runs = n_islands;
    }
  }
  if (source.contains("epsilon")) {
    config.run.epsilon = parse_epsilon(source.at("epsilon"), "epsilon");
  }
  if (!source.contains("termination")) {
    throw ConfigError("termination: missing section");
  }
  config.run.termination =
      parse_termination(source.at("termination"), "termination");

  config.run.islands.resize(n_islands);
  for (std::size_t i = 0; i < n_islands; ++i) {
    IslandSpec& spec = config.run.islands[i];
    spec.population_size = population_size;
    spec.adaptation = adaptation;
    spec.epidemic = epidemic;
    if (adapt_strategy) {
      spec.strategy = 0;
    } else if (fixed_strategy) {
      spec.strategy = *fixed_strategy;
      validate_strategy(spec.strategy);
    } else {
      spec.strategy = strategies[i];
      validate_strategy(spec.strategy);
    }
    if (spec.population_size < kMinPopulationSize) {
      throw ConfigError(
          "islands.population_size: " + std::to_string(spec.population_size) +
          " is below the minimum " + std::to_string(kMinPopulationSize) +
          " required for the mutation strategies' distinct donor indices");
    }
  }

  if (source.contains("seeds")) {
    const json& seeds = source.at("seeds");
    if (!seeds.is_array()) {
      throw ConfigError("seeds: expected an array");
    }
    if (seeds.empty()) {
      throw ConfigError("seeds: must not be empty");
    }
    for (const json& entry : seeds) {
      if (!is_non_negative_integer(entry)) {
        throw ConfigError("seeds: expected non-negative integers");
      }
      config.seeds.push_back(entry.get<std::uint64_t>());
    }
  } else {
    config.seeds = {1};
  }

  config.output_dir = get_string(source, "output_dir", "", ".");
  config.run.workers = static_cast<std::size_t>(
      get_uint(source, "workers", "", 1));
  if (config.run.workers == 0) {
    throw ConfigError("workers: must be at least 1");
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path.string() + "'");
  }
  json source;
  try {
    source = json::parse(in);
  } catch (const json::parse_error& error) {
    throw ConfigError("config '" + path.string() + "': " + error.what());
  }
  return parse_config(source, path.string());
}

nlohmann::json emit_config(const ExperimentConfig& config) {
  json out;
  out["name"] = config.name;
  out["problem"]["name"] = config.problem.name;
  if (config.problem.dimension) {
    out["problem"]["dimension"] = *config.problem.dimension;
  }

  const RunConfig& run = config.run;
  const IslandSpec& first = run.islands.front();
  out["islands"]["count"] = run.islands.size();
  out["islands"]["population_size"] = first.population_size;
  if (first.adaptation.adapt_strategy) {
    out["islands"]["strategy"] = "adaptive";
  } else {
    json strategies = json::array();
    for (const IslandSpec& spec : run.islands) strategies.push_back(spec.strategy);
    out["islands"]["strategies"] = strategies;
  }

  json topology;
  switch (run.topology.kind) {
    case TopologyKind::kRadial:
      topology["kind"] = "radial";
      topology["rings"] = run.topology.rings;
      break;
    case TopologyKind::kRing:
      topology["kind"] = "ring";
      break;
    case TopologyKind::kFullyConnected:
      topology["kind"] = "fully_connected";
      break;
  }
  out["topology"] = topology;

  out["migration"]["interval"] = run.migration.interval;
  out["migration"]["probability"] = run.migration.probability;
  out["migration"]["fraction"] = run.migration.fraction;

  const AdaptationConfig& adaptation = first.adaptation;
  out["adaptation"]["f_min"] = adaptation.f_min;
  out["adaptation"]["f_max"] = adaptation.f_max;
  out["adaptation"]["cr_min"] = adaptation.cr_min;
  out["adaptation"]["cr_max"] = adaptation.cr_max;
  out["adaptation"]["tau"] = adaptation.tau;
  out["adaptation"]["adapt_strategy"] = adaptation.adapt_strategy;
  out["adaptation"]["strategy_pool"] = adaptation.strategy_pool;

  const EpidemicConfig& epidemic = first.epidemic;
  out["epidemic"]["enabled"] = epidemic.enabled;
  out["epidemic"]["d_tol"] = epidemic.d_tol;
  out["epidemic"]["rho_elite"] = epidemic.rho_elite;
  out["epidemic"]["rho_ill"] = epidemic.rho_ill;
  out["epidemic"]["cooldown"] = epidemic.cooldown;
  out["epidemic"]["stride"] = epidemic.stride;
  out["epidemic"]["reinit_original_bounds"] = epidemic.reinit_original_bounds;

  out["pruning"]["enabled"] = run.pruning.enabled;
  out["pruning"]["n_runs"] = run.pruning.n_runs;
  out["pruning"]["rho0"] = run.pruning.rho0;
  out["pruning"]["delta_rho"] = run.pruning.delta_rho;
  out["pruning"]["n_events"] = run.pruning.n_events;
  out["pruning"]["first_event_frac"] = run.pruning.first_event_frac;

  if (run.epsilon.eps0) {
    out["epsilon"]["eps0"] = *run.epsilon.eps0;
  } else {
    out["epsilon"]["eps0"] = "auto";
  }
  out["epsilon"]["eps_inf"] = run.epsilon.eps_inf;
  if (run.epsilon.n0) out["epsilon"]["n0"] = *run.epsilon.n0;
  if (run.epsilon.n_inf) out["epsilon"]["n_inf"] = *run.epsilon.n_inf;

  if (run.termination.max_generations) {
    out["termination"]["max_generations"] = *run.termination.max_generations;
  }
  if (run.termination.max_fes) {
    out["termination"]["max_fes"] = *run.termination.max_fes;
  }
  if (run.termination.max_stall_generations) {
    out["termination"]["max_stall_generations"] =
        *run.termination.max_stall_generations;
  }

  out["seeds"] = config.seeds;
  out["output_dir"] = config.output_dir.string();
  out["workers"] = config.run.workers;
  return out;
}

}  // namespace archevo
