#include "archevo/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "archevo/errors.hpp"
#include "archevo/problems.hpp"
#include "archevo/worker_pool.hpp"

namespace archevo {

namespace {

std::string seed_file_name(const std::string& name, std::uint64_t seed) {
  return name + "_seed" + std::to_string(seed) + ".csv";
}

struct Stats {
  double mean = 0.0;
  double std_dev = 0.0;
  double best = 0.0;
};

Stats final_best_stats(const std::vector<double>& values) {
  Stats stats;
  double total = 0.0;
  for (double v : values) total += v;
  const auto n = static_cast<double>(values.size());
  stats.mean = total / n;
  if (values.size() > 1) {
    double squares = 0.0;
    for (double v : values) squares += (v - stats.mean) * (v - stats.mean);
    stats.std_dev = std::sqrt(squares / (n - 1.0));
  }
  stats.best = *std::min_element(values.begin(), values.end());
  return stats;
}

std::uint64_t summary_generations(const ExperimentConfig& config,
                                  const std::vector<RunHistory>& histories) {
  if (config.run.termination.max_generations) {
    return *config.run.termination.max_generations;
  }
  std::uint64_t generations = 0;
  for (const RunHistory& history : histories) {
    if (!history.records.empty()) {
      generations = std::max(generations, history.records.back().generation);
    }
  }
  return generations;
}

SummaryRow build_summary(const ExperimentConfig& config,
                         const std::vector<RunHistory>& histories) {
  std::vector<double> finals;
  finals.reserve(histories.size());
  for (const RunHistory& history : histories) {
    if (history.records.empty()) {
      throw ConfigError("experiment '" + config.name +
                        "': a run produced an empty history");
    }
    finals.push_back(history.records.back().best_f);
  }
  const Stats stats = final_best_stats(finals);
  SummaryRow row;
  row.config_id = config.name;
  row.n_islands = config.run.islands.size();
  row.population_size = config.run.islands.front().population_size;
  row.generations = summary_generations(config, histories);
  row.mean = stats.mean;
  row.std_dev = stats.std_dev;
  row.best = stats.best;
  return row;
}

std::vector<RunHistory> read_seed_histories(const ExperimentConfig& config,
                                            const std::filesystem::path& dir) {
  std::vector<RunHistory> histories;
  histories.reserve(config.seeds.size());
  for (std::uint64_t seed : config.seeds) {
    const auto path = dir / seed_file_name(config.name, seed);
    std::ifstream in(path);
    if (!in) {
      throw ConfigError("cannot open history '" + path.string() + "'");
    }
    histories.push_back(RunHistory::read_csv(in, path.string()));
  }
  return histories;
}

ExperimentConfig load_directory_config(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> configs;
  if (!std::filesystem::is_directory(dir)) {
    throw ConfigError("'" + dir.string() + "' is not a directory");
  }
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name.size() > 12 &&
        name.substr(name.size() - 12) == "_config.json") {
      configs.push_back(entry.path());
    }
  }
  if (configs.empty()) {
    throw ConfigError("no *_config.json found in '" + dir.string() + "'");
  }
  if (configs.size() > 1) {
    throw ConfigError("multiple experiment configs found in '" + dir.string() +
                      "'; point at a single experiment directory");
  }
  return load_config(configs.front());
}

}  // namespace

std::string summary_csv_header() {
  return "config_id,n_islands,population_size,generations,mean,std,best";
}

std::string summary_csv_row(const SummaryRow& row) {
  std::ostringstream out;
  out << row.config_id << ',' << row.n_islands << ',' << row.population_size
      << ',' << row.generations << ',' << format_double(row.mean) << ','
      << format_double(row.std_dev) << ',' << format_double(row.best);
  return out.str();
}

ExperimentResult run_experiment(const ExperimentConfig& config,
                                std::size_t seed_workers, std::ostream& log) {
  if (config.seeds.empty()) {
    throw ConfigError("experiment '" + config.name + "': seeds must not be empty");
  }
  std::filesystem::create_directories(config.output_dir);

  const Problem problem =
      make_problem(config.problem.name, config.problem.dimension);

  std::vector<RunHistory> histories(config.seeds.size());
  std::vector<SeedOutcome> outcomes(config.seeds.size());
  std::mutex log_mutex;

  WorkerPool pool(std::max<std::size_t>(1, seed_workers));
  pool.parallel_for(config.seeds.size(), [&](std::size_t idx) {
    const std::uint64_t seed = config.seeds[idx];
    RunResult result = optimize(problem, config.run, seed);

    const auto path =
        config.output_dir / seed_file_name(config.name, seed);
    std::ofstream out(path);
    if (!out) {
      throw ConfigError("cannot write history '" + path.string() + "'");
    }
    result.history.write_csv(out);
    if (!out) {
      throw ConfigError("failed writing history '" + path.string() + "'");
    }

    SeedOutcome outcome;
    outcome.seed = seed;
    outcome.best_f = result.best.fitness;
    outcome.best_psi_max = result.best.max_violation;
    outcome.feasible = result.feasible;
    outcome.generations = result.generations;
    outcome.fes = result.fes;
    outcomes[idx] = outcome;
    histories[idx] = std::move(result.history);

    std::lock_guard guard(log_mutex);
    log << config.name << " seed " << seed << ": best_f "
        << format_double(outcome.best_f) << ", psi_max "
        << format_double(outcome.best_psi_max) << ", generations "
        << outcome.generations << ", fes " << outcome.fes << '\n';
  });

  const SummaryRow summary = build_summary(config, histories);
  const auto summary_path =
      config.output_dir / (config.name + "_summary.csv");
  {
    std::ofstream out(summary_path);
    if (!out) {
      throw ConfigError("cannot write summary '" + summary_path.string() + "'");
    }
    out << summary_csv_header() << '\n' << summary_csv_row(summary) << '\n';
  }
  const auto config_path =
      config.output_dir / (config.name + "_config.json");
  {
    std::ofstream out(config_path);
    if (!out) {
      throw ConfigError("cannot write config '" + config_path.string() + "'");
    }
    out << emit_config(config).dump(2) << '\n';
  }

  ExperimentResult result;
  result.outcomes = std::move(outcomes);
  result.mean_best_f = summary.mean;
  result.std_best_f = summary.std_dev;
  result.best_best_f = summary.best;
  return result;
}

SummaryRow summarize_directory(const std::filesystem::path& dir) {
  const ExperimentConfig config = load_directory_config(dir);
  return build_summary(config, read_seed_histories(config, dir));
}

void emit_plotdata(const std::filesystem::path& dir, std::ostream& out,
                   std::ostream& warn) {
  const ExperimentConfig config = load_directory_config(dir);
  const auto histories = read_seed_histories(config, dir);

  std::size_t shortest = histories.front().records.size();
  std::size_t longest = shortest;
  for (const RunHistory& history : histories) {
    shortest = std::min(shortest, history.records.size());
    longest = std::max(longest, history.records.size());
  }
  if (shortest != longest) {
    warn << "plotdata: histories have different lengths; aligning on the "
            "shortest ("
         << shortest << " records)\n";
  }

  out << "generation,min_best_f,mean_best_f\n";
  for (std::size_t g = 0; g < shortest; ++g) {
    double minimum = histories.front().records[g].best_f;
    double total = 0.0;
    for (const RunHistory& history : histories) {
      const double value = history.records[g].best_f;
      minimum = std::min(minimum, value);
      total += value;
    }
    out << histories.front().records[g].generation << ','
        << format_double(minimum) << ','
        << format_double(total / static_cast<double>(histories.size()))
        << '\n';
  }
}

}  // namespace archevo
