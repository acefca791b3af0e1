#include "archevo/history.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "archevo/errors.hpp"

namespace archevo {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

double parse_double(const std::string& text, const std::string& context) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ConfigError(context + ": malformed number '" + text + "'");
  }
  return value;
}

std::size_t RunHistory::n_islands() const {
  return records.empty() ? 0 : records.front().island_best_f.size();
}

void RunHistory::write_csv(std::ostream& out) const {
  out << "generation,fes,best_f,best_psi_max,epsilon,diversity,"
         "epidemic_fired,pruning_event";
  for (std::size_t k = 0; k < n_islands(); ++k) {
    out << ",island" << k << "_best_f";
  }
  out << '\n';
  for (const GenerationRecord& row : records) {
    out << row.generation << ',' << row.fes << ',' << format_double(row.best_f)
        << ',' << format_double(row.best_psi_max) << ','
        << format_double(row.epsilon) << ',' << format_double(row.diversity)
        << ',' << (row.epidemic_fired ? 1 : 0) << ',' << row.pruning_event;
    for (double value : row.island_best_f) {
      out << ',' << format_double(value);
    }
    out << '\n';
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

RunHistory RunHistory::read_csv(std::istream& in,
                                const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ConfigError(source_name + ": empty history file");
  }
  const auto header = split_csv_line(line);
  const std::vector<std::string> fixed = {
      "generation",     "fes",       "best_f",         "best_psi_max",
      "epsilon",        "diversity", "epidemic_fired", "pruning_event"};
  if (header.size() < fixed.size()) {
    throw ConfigError(source_name + ": truncated header");
  }
  for (std::size_t k = 0; k < fixed.size(); ++k) {
    if (header[k] != fixed[k]) {
      throw ConfigError(source_name + ": unexpected column '" + header[k] +
                        "', wanted '" + fixed[k] + "'");
    }
  }
  const std::size_t islands = header.size() - fixed.size();

  RunHistory history;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    const std::string where = source_name + ":" + std::to_string(line_no);
    if (fields.size() != header.size()) {
      throw ConfigError(where + ": expected " +
                        std::to_string(header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    }
    GenerationRecord row;
    row.generation = std::strtoull(fields[0].c_str(), nullptr, 10);
    row.fes = std::strtoull(fields[1].c_str(), nullptr, 10);
    row.best_f = parse_double(fields[2], where);
    row.best_psi_max = parse_double(fields[3], where);
    row.epsilon = parse_double(fields[4], where);
    row.diversity = parse_double(fields[5], where);
    row.epidemic_fired = fields[6] == "1";
    row.pruning_event = std::atoi(fields[7].c_str());
    row.island_best_f.reserve(islands);
    for (std::size_t k = 0; k < islands; ++k) {
      row.island_best_f.push_back(parse_double(fields[fixed.size() + k], where));
    }
    history.records.push_back(std::move(row));
  }
  return history;
}

}  // namespace archevo
