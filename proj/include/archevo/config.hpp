#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "archevo/runner.hpp"

#include <json.hpp>

namespace archevo {

/// Problem selection by registry name.
struct ProblemSelection {
  std::string name;
  std::optional<std::size_t> dimension;
};

/// Everything one experiment needs: the problem, the run configuration,
/// the seeds to sweep, and where the outputs go.
struct ExperimentConfig {
  std::string name = "experiment";
  ProblemSelection problem;
  RunConfig run;
  std::vector<std::uint64_t> seeds;
  std::filesystem::path output_dir = ".";
};

/// Parses and validates a JSON experiment config. Unknown keys are
/// rejected; the error names the offending key path. Defaults follow the
/// published hyperparameter choices; single-island runs self-adapt the
/// strategy by default, multi-island runs pin per-island strategies.
ExperimentConfig parse_config(const nlohmann::json& source,
                              const std::string& source_name);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Serializes the fully-resolved config. parse(emit(c)) == c.
nlohmann::json emit_config(const ExperimentConfig& config);

}  // namespace archevo
