#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace archevo {

/// One per-generation log row. `diversity` is NaN on generations where no
/// island measured it; with several islands it is the mean of the measured
/// values. `pruning_event` is the 0-based event index, -1 otherwise.
struct GenerationRecord {
  std::uint64_t generation = 0;
  std::uint64_t fes = 0;
  double best_f = 0.0;
  double best_psi_max = 0.0;
  double epsilon = 0.0;
  double diversity = 0.0;
  bool epidemic_fired = false;
  int pruning_event = -1;
  std::vector<double> island_best_f;
};

struct RunHistory {
  std::vector<GenerationRecord> records;

  std::size_t n_islands() const;
  /// Header: generation,fes,best_f,best_psi_max,epsilon,diversity,
  /// epidemic_fired,pruning_event,island<k>_best_f...
  void write_csv(std::ostream& out) const;
  static RunHistory read_csv(std::istream& in, const std::string& source_name);
};

/// Shortest-round-trip-safe text for a double; "nan", "inf" and "-inf"
/// spelled literally. Used for every float the artifact writes, so equal
/// values always serialize to equal bytes.
std::string format_double(double value);

/// Inverse of format_double; throws ConfigError on malformed input.
double parse_double(const std::string& text, const std::string& context);

}  // namespace archevo
