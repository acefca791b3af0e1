#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "archevo/individual.hpp"
#include "archevo/problem.hpp"
#include "archevo/rng.hpp"

namespace archevo::testing {

/// Builds an evaluated population from explicit coordinates.
inline Population make_population(const Problem& problem,
                                  std::vector<std::vector<double>> coords,
                                  std::uint64_t generation = 0) {
  Population population;
  population.generation = generation;
  std::uint64_t fes = 0;
  for (auto& point : coords) {
    Individual member;
    member.x = std::move(point);
    evaluate(problem, member, fes);
    population.members.push_back(std::move(member));
  }
  return population;
}

/// A population whose members carry preset fitness/violation pairs; the
/// coordinates are placeholders.
inline Population make_scored_population(
    const std::vector<std::pair<double, double>>& scores) {
  Population population;
  for (const auto& [f, psi] : scores) {
    Individual member;
    member.x = {0.0};
    member.fitness = f;
    member.max_violation = psi;
    member.evaluated = true;
    population.members.push_back(std::move(member));
  }
  return population;
}

inline bool same_members(const Individual& a, const Individual& b) {
  return a.x == b.x && a.fitness == b.fitness &&
         a.max_violation == b.max_violation && a.evaluated == b.evaluated &&
         a.scale_factor == b.scale_factor &&
         a.crossover_prob == b.crossover_prob && a.strategy == b.strategy;
}

inline bool same_population(const Population& a, const Population& b) {
  if (a.generation != b.generation) return false;
  if (a.members.size() != b.members.size()) return false;
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    if (!same_members(a.members[i], b.members[i])) return false;
  }
  return true;
}

/// Unique scratch directory under the system temp root; removed on scope
/// exit.
class TempDir {
 public:
  explicit TempDir(const std::string& label) {
    RandomSource rng(std::random_device{}(), std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            (label + "_" + std::to_string(rng.next_u64()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace archevo::testing
