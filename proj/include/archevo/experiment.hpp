#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "archevo/config.hpp"
#include "archevo/history.hpp"
#include "archevo/runner.hpp"

namespace archevo {

struct SeedOutcome {
  std::uint64_t seed = 0;
  double best_f = 0.0;
  double best_psi_max = 0.0;
  bool feasible = false;
  std::uint64_t generations = 0;
  std::uint64_t fes = 0;
};

struct ExperimentResult {
  std::vector<SeedOutcome> outcomes;
  double mean_best_f = 0.0;
  double std_best_f = 0.0;
  double best_best_f = 0.0;
};

/// Runs every seed of the experiment and writes into output_dir:
///   <name>_seed<seed>.csv   per-generation history per seed
///   <name>_summary.csv      one aggregate row
///   <name>_config.json      the resolved configuration
/// `log` receives one progress line per seed. `seed_workers` seeds run
/// concurrently; outputs do not depend on either worker knob.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                std::size_t seed_workers, std::ostream& log);

/// Aggregate statistics of final best_f across seeds.
struct SummaryRow {
  std::string config_id;
  std::size_t n_islands = 0;
  std::size_t population_size = 0;
  std::uint64_t generations = 0;
  double mean = 0.0;
  double std_dev = 0.0;
  double best = 0.0;
};

std::string summary_csv_header();
std::string summary_csv_row(const SummaryRow& row);

/// Recomputes the summary from the per-seed CSVs and resolved config found
/// in `dir`. Throws ConfigError when the directory holds no experiment.
SummaryRow summarize_directory(const std::filesystem::path& dir);

/// Writes "generation,min_best_f,mean_best_f" rows aggregated across the
/// per-seed histories in `dir`, truncated to the shortest history (a note
/// goes to `warn` when lengths differ).
void emit_plotdata(const std::filesystem::path& dir, std::ostream& out,
                   std::ostream& warn);

}  // namespace archevo
