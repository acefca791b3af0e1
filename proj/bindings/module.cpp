#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "archevo/archipelago.hpp"
#include "archevo/config.hpp"
#include "archevo/constraints.hpp"
#include "archevo/de_engine.hpp"
#include "archevo/epidemic.hpp"
#include "archevo/errors.hpp"
#include "archevo/experiment.hpp"
#include "archevo/problems.hpp"
#include "archevo/pruning.hpp"
#include "archevo/runner.hpp"

namespace py = pybind11;
using namespace archevo;

namespace {

/// Wraps a Python callable as an Evaluator. Each call re-acquires the GIL,
/// so evaluation works from pool worker threads while optimize() holds a
/// gil_scoped_release.
Evaluator wrap_evaluator(py::object fn) {
  auto holder = std::make_shared<py::object>(std::move(fn));
  return [holder](std::span<const double> x) -> double {
    py::gil_scoped_acquire gil;
    py::list args(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) args[j] = x[j];
    return (*holder)(args).cast<double>();
  };
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Self-adaptive multi-population differential evolution for constrained "
      "global optimization";

  py::register_exception<ConfigError>(m, "ConfigError");

  py::class_<Bounds>(m, "Bounds")
      .def(py::init<std::vector<double>, std::vector<double>>(),
           py::arg("lower"), py::arg("upper"))
      .def_property_readonly("dimension", &Bounds::dimension)
      .def_property_readonly(
          "lower", [](const Bounds& b) { return b.lower(); })
      .def_property_readonly(
          "upper", [](const Bounds& b) { return b.upper(); })
      .def("contains",
           [](const Bounds& b, const std::vector<double>& x) {
             return b.contains(x);
           },
           py::arg("x"))
      .def("__eq__",
           [](const Bounds& a, const Bounds& b) { return a == b; });

  py::class_<Problem>(m, "Problem")
      .def(py::init([](const std::string& name, const Bounds& bounds,
                       py::object objective, py::list constraints) {
             std::vector<Evaluator> wrapped;
             for (auto item : constraints) {
               wrapped.push_back(
                   wrap_evaluator(py::reinterpret_borrow<py::object>(item)));
             }
             return Problem(name, bounds, wrap_evaluator(std::move(objective)),
                            std::move(wrapped));
           }),
           py::arg("name"), py::arg("bounds"), py::arg("objective"),
           py::arg("constraints") = py::list())
      .def_property_readonly("name", &Problem::name)
      .def_property_readonly("bounds", &Problem::bounds)
      .def_property_readonly("dimension", &Problem::dimension)
      .def_property_readonly("constrained", &Problem::constrained)
      .def("add_constraint",
           [](Problem& p, py::object fn) {
             p.add_constraint(wrap_evaluator(std::move(fn)));
           },
           py::arg("fn"))
      .def("add_equality",
           [](Problem& p, py::object fn, double target, double tolerance) {
             p.add_equality(EqualityConstraint{wrap_evaluator(std::move(fn)),
                                               target, tolerance});
           },
           py::arg("fn"), py::arg("target"), py::arg("tolerance"))
      .def("evaluate",
           [](const Problem& p, std::vector<double> x) {
             Individual member;
             member.x = std::move(x);
             std::uint64_t count = 0;
             evaluate(p, member, count);
             return py::make_tuple(member.fitness, member.max_violation);
           },
           py::arg("x"),
           "Returns (fitness, max_violation) for a point.");

  py::class_<Individual>(m, "Individual")
      .def_readonly("x", &Individual::x)
      .def_readonly("fitness", &Individual::fitness)
      .def_readonly("max_violation", &Individual::max_violation)
      .def_readonly("scale_factor", &Individual::scale_factor)
      .def_readonly("crossover_prob", &Individual::crossover_prob)
      .def_readonly("strategy", &Individual::strategy);

  py::class_<AdaptationConfig>(m, "AdaptationConfig")
      .def(py::init<>())
      .def_readwrite("f_min", &AdaptationConfig::f_min)
      .def_readwrite("f_max", &AdaptationConfig::f_max)
      .def_readwrite("cr_min", &AdaptationConfig::cr_min)
      .def_readwrite("cr_max", &AdaptationConfig::cr_max)
      .def_readwrite("tau", &AdaptationConfig::tau)
      .def_readwrite("adapt_strategy", &AdaptationConfig::adapt_strategy)
      .def_readwrite("strategy_pool", &AdaptationConfig::strategy_pool);

  py::class_<EpidemicConfig>(m, "EpidemicConfig")
      .def(py::init<>())
      .def_readwrite("enabled", &EpidemicConfig::enabled)
      .def_readwrite("d_tol", &EpidemicConfig::d_tol)
      .def_readwrite("rho_elite", &EpidemicConfig::rho_elite)
      .def_readwrite("rho_ill", &EpidemicConfig::rho_ill)
      .def_readwrite("cooldown", &EpidemicConfig::cooldown)
      .def_readwrite("stride", &EpidemicConfig::stride)
      .def_readwrite("reinit_original_bounds",
                     &EpidemicConfig::reinit_original_bounds);

  py::class_<PruningConfig>(m, "PruningConfig")
      .def(py::init<>())
      .def_readwrite("enabled", &PruningConfig::enabled)
      .def_readwrite("n_runs", &PruningConfig::n_runs)
      .def_readwrite("rho0", &PruningConfig::rho0)
      .def_readwrite("delta_rho", &PruningConfig::delta_rho)
      .def_readwrite("n_events", &PruningConfig::n_events)
      .def_readwrite("first_event_frac", &PruningConfig::first_event_frac);

  py::enum_<TopologyKind>(m, "TopologyKind")
      .value("RADIAL", TopologyKind::kRadial)
      .value("RING", TopologyKind::kRing)
      .value("FULLY_CONNECTED", TopologyKind::kFullyConnected);

  py::class_<Topology>(m, "Topology")
      .def(py::init<>())
      .def_readwrite("kind", &Topology::kind)
      .def_readwrite("n_islands", &Topology::n_islands)
      .def_readwrite("rings", &Topology::rings);

  py::class_<MigrationConfig>(m, "MigrationConfig")
      .def(py::init<>())
      .def_readwrite("interval", &MigrationConfig::interval)
      .def_readwrite("probability", &MigrationConfig::probability)
      .def_readwrite("fraction", &MigrationConfig::fraction);

  py::class_<TerminationCriteria>(m, "TerminationCriteria")
      .def(py::init<>())
      .def_readwrite("max_fes", &TerminationCriteria::max_fes)
      .def_readwrite("max_generations", &TerminationCriteria::max_generations)
      .def_readwrite("max_stall_generations",
                     &TerminationCriteria::max_stall_generations);

  py::class_<EpsilonSettings>(m, "EpsilonSettings")
      .def(py::init<>())
      .def_readwrite("eps0", &EpsilonSettings::eps0)
      .def_readwrite("eps_inf", &EpsilonSettings::eps_inf)
      .def_readwrite("n0", &EpsilonSettings::n0)
      .def_readwrite("n_inf", &EpsilonSettings::n_inf);

  py::class_<EpsilonSchedule>(m, "EpsilonSchedule")
      .def(py::init<>())
      .def(py::init([](double eps0, double eps_inf, std::uint64_t n0,
                       std::uint64_t n_inf) {
             EpsilonSchedule schedule{eps0, eps_inf, n0, n_inf};
             schedule.validate();
             return schedule;
           }),
           py::arg("eps0"), py::arg("eps_inf"), py::arg("n0"),
           py::arg("n_inf"))
      .def_readwrite("eps0", &EpsilonSchedule::eps0)
      .def_readwrite("eps_inf", &EpsilonSchedule::eps_inf)
      .def_readwrite("n0", &EpsilonSchedule::n0)
      .def_readwrite("n_inf", &EpsilonSchedule::n_inf);

  py::class_<IslandSpec>(m, "IslandSpec")
      .def(py::init<>())
      .def_readwrite("strategy", &IslandSpec::strategy)
      .def_readwrite("population_size", &IslandSpec::population_size)
      .def_readwrite("adaptation", &IslandSpec::adaptation)
      .def_readwrite("epidemic", &IslandSpec::epidemic);

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("islands", &RunConfig::islands)
      .def_readwrite("topology", &RunConfig::topology)
      .def_readwrite("migration", &RunConfig::migration)
      .def_readwrite("epsilon", &RunConfig::epsilon)
      .def_readwrite("pruning", &RunConfig::pruning)
      .def_readwrite("termination", &RunConfig::termination)
      .def_readwrite("workers", &RunConfig::workers);

  py::class_<GenerationRecord>(m, "GenerationRecord")
      .def_readonly("generation", &GenerationRecord::generation)
      .def_readonly("fes", &GenerationRecord::fes)
      .def_readonly("best_f", &GenerationRecord::best_f)
      .def_readonly("best_psi_max", &GenerationRecord::best_psi_max)
      .def_readonly("epsilon", &GenerationRecord::epsilon)
      .def_readonly("diversity", &GenerationRecord::diversity)
      .def_readonly("epidemic_fired", &GenerationRecord::epidemic_fired)
      .def_readonly("pruning_event", &GenerationRecord::pruning_event)
      .def_readonly("island_best_f", &GenerationRecord::island_best_f);

  py::class_<RunHistory>(m, "RunHistory")
      .def_readonly("records", &RunHistory::records)
      .def("csv",
           [](const RunHistory& history) {
             std::ostringstream out;
             history.write_csv(out);
             return out.str();
           });

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("best", &RunResult::best)
      .def_readonly("feasible", &RunResult::feasible)
      .def_readonly("generations", &RunResult::generations)
      .def_readonly("fes", &RunResult::fes)
      .def_readonly("epsilon", &RunResult::epsilon)
      .def_readonly("history", &RunResult::history);

  m.def("make_problem", &make_problem, py::arg("name"),
        py::arg("dimension") = std::nullopt,
        "Builds a registered benchmark problem.");
  m.def("benchmark_names", [] {
    std::vector<std::string> names;
    for (const auto& spec : benchmark_specs()) names.push_back(spec.name);
    return names;
  });
  m.def("epsilon_level", &epsilon_level, py::arg("schedule"),
        py::arg("generation"));
  m.def(
      "diversity_score",
      [](const std::vector<std::vector<double>>& points, const Bounds& box) {
        Population population;
        for (const auto& x : points) {
          Individual member;
          member.x = x;
          population.members.push_back(std::move(member));
        }
        return diversity_score(population, box);
      },
      py::arg("points"), py::arg("bounds"),
      "Mean pairwise bound-normalized distance of a point set.");
  m.def("pruning_schedule", &pruning_schedule, py::arg("config"),
        py::arg("n_generations"));
  m.def("neighbors", &neighbors, py::arg("topology"), py::arg("island"),
        py::arg("phase"));
  py::enum_<MigrationPhase>(m, "MigrationPhase")
      .value("OUTWARD", MigrationPhase::kOutward)
      .value("INWARD", MigrationPhase::kInward);
  py::class_<PruningEvent>(m, "PruningEvent")
      .def_readonly("generation", &PruningEvent::generation)
      .def_readonly("rho", &PruningEvent::rho);

  m.def(
      "optimize",
      [](const Problem& problem, const RunConfig& config, std::uint64_t seed) {
        py::gil_scoped_release release;
        return optimize(problem, config, seed);
      },
      py::arg("problem"), py::arg("config"), py::arg("seed"),
      "Runs the full optimizer and returns a RunResult.");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
