"""Hierarchical decision making on NK fitness landscapes.

Two subordinates hill-climb disjoint slices of a rugged binary landscape
from a shared status quo; a passive or active decision maker finalizes
their combined proposal.  Monte Carlo batches score each scenario by its
probability of reaching the global optimum and by how close the final
decision's fitness comes to it.
"""

from ._version import __version__
from .agents import (
    DecisionAssignment,
    EpisodeOutcome,
    Mode,
    Proposal,
    assemble,
    climb_path,
    decide,
    run_episode,
    run_episode_from,
    steepest_ascent,
    subordinate_propose,
)
from .landscape import (
    Genotype,
    Landscape,
    OptimumReport,
    enumerate_global_optimum,
    generate_landscape,
    genotype_to_index,
    index_to_genotype,
)
from .reporting import (
    CSV_COLUMNS,
    ReportRow,
    emit_csv,
    emit_json,
    emit_scatter_data,
    report_row,
)
from .runner import (
    RunConfig,
    ScenarioResult,
    TrialResult,
    derive_trial_seed,
    hash64,
    run_scenario,
    run_trial,
    run_trials,
    scenario_stream_key,
    splitmix64,
    summarize_trials,
    wilson_interval,
)
from .scenarios import (
    ScenarioConfigError,
    ScenarioSpec,
    builtin_scenario,
    builtin_scenarios,
    parse_scenario_config,
    preset_weights,
    scenario_to_config,
    validate_scenario,
    with_preset,
)

__all__ = [
    "__version__",
    "CSV_COLUMNS",
    "DecisionAssignment",
    "EpisodeOutcome",
    "Genotype",
    "Landscape",
    "Mode",
    "OptimumReport",
    "Proposal",
    "ReportRow",
    "RunConfig",
    "ScenarioConfigError",
    "ScenarioResult",
    "ScenarioSpec",
    "TrialResult",
    "assemble",
    "builtin_scenario",
    "builtin_scenarios",
    "climb_path",
    "decide",
    "derive_trial_seed",
    "emit_csv",
    "emit_json",
    "emit_scatter_data",
    "enumerate_global_optimum",
    "generate_landscape",
    "genotype_to_index",
    "hash64",
    "index_to_genotype",
    "parse_scenario_config",
    "preset_weights",
    "report_row",
    "run_episode",
    "run_episode_from",
    "run_scenario",
    "run_trial",
    "run_trials",
    "scenario_stream_key",
    "scenario_to_config",
    "splitmix64",
    "steepest_ascent",
    "subordinate_propose",
    "summarize_trials",
    "validate_scenario",
    "wilson_interval",
    "with_preset",
]
