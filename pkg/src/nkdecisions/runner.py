"""Seeded trial batches per scenario, with optimality and fitness-rate metrics.

Every trial draws a fresh landscape and status quo, runs one episode, and
scores the final decision against the exhaustively enumerated optimum:

- a trial *is optimal* when its final fitness equals the optimum exactly
  (equivalent to argmax membership, since the argmax set is defined by
  exact fitness equality);
- its *fitness rate* is final fitness / optimum fitness, 1.0 exactly on
  optimal trials.

Scenario-level aggregation reports the fraction of optimal trials with a
Wilson score interval, and the mean fitness rate with its standard error.

Seed derivation (byte-exact contract, relied on by reproduction tests):

- ``hash64(key)``   = first 8 bytes of BLAKE2b(key, digest_size=8),
  little-endian.
- ``trial_seed``    = splitmix64((master_seed XOR hash64(key)) + trial_index
  mod 2^64), where ``key`` is ``"split:{a}-{b}"`` for a scenario with split
  (a, b).  Keying on the split, not the code, gives the passive and active
  member of each scenario pair identical landscapes and status quos, so
  active-vs-passive comparisons are paired per trial.
- ``landscape_seed``  = splitmix64(trial_seed); tables are
  ``numpy.random.default_rng(landscape_seed).random((n, 2**(k+1)))``.
- ``status_quo_seed`` = splitmix64(landscape_seed); the status quo is
  ``numpy.random.default_rng(status_quo_seed).integers(0, 2, size=n)``.
- ``splitmix64(x)`` = z = (x + 0x9E3779B97F4A7C15) mod 2^64;
  z = ((z XOR z>>30) * 0xBF58476D1CE4E5B9) mod 2^64;
  z = ((z XOR z>>27) * 0x94D049BB133111EB) mod 2^64; return z XOR z>>31.
"""

from __future__ import annotations

import hashlib
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from statistics import NormalDist

import numpy as np

from .agents import DecisionAssignment, run_episode
from .landscape import MASK64, enumerate_global_optimum, generate_landscape
from .scenarios import ScenarioSpec, validate_scenario

_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(value: int) -> int:
    """One output of the splitmix64 generator seeded at ``value``."""
    z = (value + _SPLITMIX_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def hash64(key: str) -> int:
    """Stable 64-bit hash of a string (BLAKE2b-8, little-endian)."""
    return int.from_bytes(hashlib.blake2b(key.encode("utf-8"), digest_size=8).digest(), "little")


def derive_trial_seed(master_seed: int, key: str, trial_index: int) -> int:
    """Per-trial seed; injective over trial indices for fixed inputs."""
    base = ((int(master_seed) & MASK64) ^ hash64(key)) & MASK64
    return splitmix64((base + int(trial_index)) & MASK64)


def scenario_stream_key(spec: ScenarioSpec) -> str:
    """Seed-derivation key: scenarios sharing a split share trial streams."""
    return f"split:{spec.split[0]}-{spec.split[1]}"


@dataclass(frozen=True)
class RunConfig:
    """Batch parameters; everything random is derived from the master seed."""

    trials: int = 10_000
    master_seed: int = 0
    confidence: float = 0.95
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not 0.0 < self.confidence < 1.0:
            raise ValueError(f"confidence must be in (0, 1), got {self.confidence}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True, slots=True)
class TrialResult:
    """One episode scored against its landscape's global optimum."""

    trial_index: int
    final_fitness: float
    optimum_fitness: float
    is_optimal: bool
    fitness_rate: float

    @property
    def fitness_diff(self) -> float:
        return self.optimum_fitness - self.final_fitness


@dataclass(frozen=True)
class ScenarioResult:
    """Aggregated metrics for one scenario batch."""

    code: str
    trials: int
    master_seed: int
    confidence: float
    poo: float
    poo_ci: tuple[float, float]
    mean_fitness_rate: float
    fitness_rate_se: float
    mean_fitness_diff: float


@lru_cache(maxsize=None)
def _assignment_for(split: tuple[int, int]) -> DecisionAssignment:
    return DecisionAssignment.from_split(*split)


def run_trial(spec: ScenarioSpec, trial_seed: int, trial_index: int = 0) -> TrialResult:
    """One independent trial: fresh landscape, one episode, exact scoring.

    Pure function of ``(spec, trial_seed)``; see the module docstring for
    how the landscape and status-quo streams derive from the trial seed.
    """
    landscape_seed = splitmix64(int(trial_seed) & MASK64)
    status_quo_seed = splitmix64(landscape_seed)
    landscape = generate_landscape(spec.n, spec.k, spec.weights, seed=landscape_seed)
    rng = np.random.default_rng(status_quo_seed)
    outcome = run_episode(landscape, _assignment_for(spec.split), spec.mode, rng)
    optimum = enumerate_global_optimum(landscape).fitness
    final = outcome.final_fitness
    is_optimal = final == optimum
    if optimum > 0.0:
        rate = final / optimum
    else:
        rate = 1.0 if is_optimal else 0.0
    return TrialResult(
        trial_index=trial_index,
        final_fitness=final,
        optimum_fitness=optimum,
        is_optimal=is_optimal,
        fitness_rate=rate,
    )


def _trial_range(args) -> list[TrialResult]:
    spec, master_seed, key, start, stop = args
    return [
        run_trial(spec, derive_trial_seed(master_seed, key, i), i)
        for i in range(start, stop)
    ]


def run_trials(spec: ScenarioSpec, config: RunConfig) -> list[TrialResult]:
    """All trials of a batch, in trial-index order.

    The result is identical for any worker count: trials are pure functions
    of their derived seeds and are reassembled in index order.
    """
    validate_scenario(spec)
    key = scenario_stream_key(spec)
    if config.workers == 1 or config.trials < 2 * config.workers:
        return _trial_range((spec, config.master_seed, key, 0, config.trials))
    n_chunks = min(config.trials, config.workers * 4)
    bounds = [round(config.trials * i / n_chunks) for i in range(n_chunks + 1)]
    jobs = [
        (spec, config.master_seed, key, start, stop)
        for start, stop in zip(bounds, bounds[1:])
        if stop > start
    ]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        parts = list(pool.map(_trial_range, jobs))
    return [result for part in parts for result in part]


def summarize_trials(spec: ScenarioSpec, results: list[TrialResult], config: RunConfig) -> ScenarioResult:
    """Fold trial results (ascending index order) into scenario metrics."""
    trials = len(results)
    if trials == 0:
        raise ValueError("cannot summarize an empty trial batch")
    successes = sum(1 for r in results if r.is_optimal)
    mean_rate = sum(r.fitness_rate for r in results) / trials
    mean_diff = sum(r.fitness_diff for r in results) / trials
    if trials > 1:
        rates = np.fromiter((r.fitness_rate for r in results), dtype=np.float64, count=trials)
        se = float(rates.std(ddof=1) / math.sqrt(trials))
    else:
        se = 0.0
    return ScenarioResult(
        code=spec.code,
        trials=trials,
        master_seed=config.master_seed,
        confidence=config.confidence,
        poo=successes / trials,
        poo_ci=wilson_interval(successes, trials, config.confidence),
        mean_fitness_rate=mean_rate,
        fitness_rate_se=se,
        mean_fitness_diff=mean_diff,
    )


def run_scenario(spec: ScenarioSpec, config: RunConfig) -> ScenarioResult:
    """Run a full batch and aggregate it; deterministic in (spec, config)."""
    return summarize_trials(spec, run_trials(spec, config), config)


def wilson_interval(successes: int, trials: int, confidence: float = 0.95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if not 0 <= successes <= trials:
        raise ValueError(f"successes must be in [0, {trials}], got {successes}")
    if not 0.0 < confidence < 1.0:
        raise ValueError(f"confidence must be in (0, 1), got {confidence}")
    z = NormalDist().inv_cdf(0.5 + confidence / 2.0)
    p = successes / trials
    denom = 1.0 + z * z / trials
    center = (p + z * z / (2.0 * trials)) / denom
    half = (z / denom) * math.sqrt(p * (1.0 - p) / trials + z * z / (4.0 * trials * trials))
    low = max(0.0, center - half)
    high = min(1.0, center + half)
    if successes == 0:
        low = 0.0
    if successes == trials:
        high = 1.0
    return (low, high)
