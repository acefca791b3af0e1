#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "archevo/config.hpp"
#include "archevo/errors.hpp"
#include "archevo/experiment.hpp"

namespace {

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    const std::uint64_t value = std::stoull(token, &used);
    if (used != token.size()) {
      throw archevo::ConfigError("--seeds: malformed entry '" + token + "'");
    }
    seeds.push_back(value);
  }
  if (seeds.empty()) {
    throw archevo::ConfigError("--seeds: empty list");
  }
  return seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-adaptive multi-population differential evolution runner"};
  app.require_subcommand(1);

  std::string config_path;
  std::string seeds_text;
  std::string out_dir;
  std::size_t workers = 0;
  CLI::App* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("config", config_path, "Experiment config (JSON)")
      ->required();
  run->add_option("--seeds", seeds_text, "Comma-separated seed list override");
  run->add_option("--out", out_dir, "Output directory override");
  run->add_option("--workers", workers,
                  "Worker threads per run (seeds run sequentially)");

  std::string summarize_dir;
  CLI::App* summarize =
      app.add_subcommand("summarize", "Print the summary of a run directory");
  summarize->add_option("dir", summarize_dir, "Experiment output directory")
      ->required();

  std::string plotdata_dir;
  CLI::App* plotdata = app.add_subcommand(
      "plotdata", "Print generation vs best-fitness aggregates");
  plotdata->add_option("dir", plotdata_dir, "Experiment output directory")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      archevo::ExperimentConfig config = archevo::load_config(config_path);
      if (!seeds_text.empty()) config.seeds = parse_seed_list(seeds_text);
      if (!out_dir.empty()) config.output_dir = out_dir;
      if (workers > 0) config.run.workers = workers;
      const auto result = archevo::run_experiment(config, 1, std::cout);
      std::cout << "mean " << archevo::format_double(result.mean_best_f)
                << ", std " << archevo::format_double(result.std_best_f)
                << ", best " << archevo::format_double(result.best_best_f)
                << '\n';
    } else if (summarize->parsed()) {
      const auto row = archevo::summarize_directory(summarize_dir);
      std::cout << archevo::summary_csv_header() << '\n'
                << archevo::summary_csv_row(row) << '\n';
    } else if (plotdata->parsed()) {
      archevo::emit_plotdata(plotdata_dir, std::cout, std::cerr);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 0;
}
