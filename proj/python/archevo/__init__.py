"""Self-adaptive multi-population differential evolution.

The compiled core exposes the optimizer, benchmark problems, and the pure
helper operations (epsilon schedule, diversity, pruning schedule, topology
neighbors).
"""

from ._core import (
    AdaptationConfig,
    Bounds,
    ConfigError,
    EpidemicConfig,
    EpsilonSchedule,
    EpsilonSettings,
    GenerationRecord,
    Individual,
    IslandSpec,
    MigrationConfig,
    MigrationPhase,
    Problem,
    PruningConfig,
    PruningEvent,
    RunConfig,
    RunHistory,
    RunResult,
    TerminationCriteria,
    Topology,
    TopologyKind,
    __version__,
    benchmark_names,
    diversity_score,
    epsilon_level,
    make_problem,
    neighbors,
    optimize,
    pruning_schedule,
)

__all__ = [
    "AdaptationConfig",
    "Bounds",
    "ConfigError",
    "EpidemicConfig",
    "EpsilonSchedule",
    "EpsilonSettings",
    "GenerationRecord",
    "Individual",
    "IslandSpec",
    "MigrationConfig",
    "MigrationPhase",
    "Problem",
    "PruningConfig",
    "PruningEvent",
    "RunConfig",
    "RunHistory",
    "RunResult",
    "TerminationCriteria",
    "Topology",
    "TopologyKind",
    "__version__",
    "benchmark_names",
    "diversity_score",
    "epsilon_level",
    "make_problem",
    "neighbors",
    "optimize",
    "pruning_schedule",
]
