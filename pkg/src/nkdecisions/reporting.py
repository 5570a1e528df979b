"""Flatten scenario results into CSV, JSON, and scatter-plot text.

CSV and scatter output print reals with 6 decimal digits (round-half-even,
Python's default float formatting), so identical inputs always serialize to
identical bytes.  JSON keeps full float precision and echoes the run
configuration so every row can be re-derived independently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence, TextIO

from ._version import __version__
from .runner import RunConfig, ScenarioResult
from .scenarios import ScenarioSpec

CSV_COLUMNS = (
    "scenario", "mode", "split", "n", "k", "trials", "master_seed",
    "poo", "poo_ci_low", "poo_ci_high",
    "mean_fitness_rate", "fitness_rate_se", "mean_fitness_diff",
)

SCATTER_COLUMNS = ("code", "mode", "poo", "mean_fitness_rate")


@dataclass(frozen=True)
class ReportRow:
    """One scenario's results flattened to scalar columns."""

    scenario: str
    mode: str
    split: tuple[int, int]
    n: int
    k: int
    trials: int
    master_seed: int
    poo: float
    poo_ci_low: float
    poo_ci_high: float
    mean_fitness_rate: float
    fitness_rate_se: float
    mean_fitness_diff: float


def report_row(spec: ScenarioSpec, result: ScenarioResult) -> ReportRow:
    """Combine a scenario spec with its aggregated result."""
    return ReportRow(
        scenario=result.code,
        mode=spec.mode.value,
        split=spec.split,
        n=spec.n,
        k=spec.k,
        trials=result.trials,
        master_seed=result.master_seed,
        poo=result.poo,
        poo_ci_low=result.poo_ci[0],
        poo_ci_high=result.poo_ci[1],
        mean_fitness_rate=result.mean_fitness_rate,
        fitness_rate_se=result.fitness_rate_se,
        mean_fitness_diff=result.mean_fitness_diff,
    )


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def _require_rows(rows: Sequence[ReportRow]) -> None:
    if not rows:
        raise ValueError("no report rows to emit")


def emit_csv(rows: Sequence[ReportRow], sink: TextIO | None = None) -> str:
    """CSV text: fixed column order, one line per scenario, 6-decimal reals."""
    _require_rows(rows)
    lines = [",".join(CSV_COLUMNS)]
    for r in rows:
        lines.append(
            ",".join(
                (
                    r.scenario,
                    r.mode,
                    f"{r.split[0]}-{r.split[1]}",
                    str(r.n),
                    str(r.k),
                    str(r.trials),
                    str(r.master_seed),
                    _fmt(r.poo),
                    _fmt(r.poo_ci_low),
                    _fmt(r.poo_ci_high),
                    _fmt(r.mean_fitness_rate),
                    _fmt(r.fitness_rate_se),
                    _fmt(r.mean_fitness_diff),
                )
            )
        )
    text = "\n".join(lines) + "\n"
    if sink is not None:
        sink.write(text)
    return text


def emit_scatter_data(rows: Sequence[ReportRow], sink: TextIO | None = None) -> str:
    """Per-scenario scatter records (code, mode, poo, mean_fitness_rate)."""
    _require_rows(rows)
    lines = [",".join(SCATTER_COLUMNS)]
    for r in rows:
        lines.append(f"{r.scenario},{r.mode},{_fmt(r.poo)},{_fmt(r.mean_fitness_rate)}")
    text = "\n".join(lines) + "\n"
    if sink is not None:
        sink.write(text)
    return text


def emit_json(rows: Sequence[ReportRow], config: RunConfig, sink: TextIO | None = None) -> str:
    """Lossless JSON: full-precision metrics, CIs, and the run configuration."""
    _require_rows(rows)
    payload = {
        "version": __version__,
        "config": {
            "trials": config.trials,
            "master_seed": config.master_seed,
            "confidence": config.confidence,
        },
        "results": [
            {
                "scenario": r.scenario,
                "mode": r.mode,
                "split": list(r.split),
                "n": r.n,
                "k": r.k,
                "trials": r.trials,
                "master_seed": r.master_seed,
                "poo": r.poo,
                "poo_ci_low": r.poo_ci_low,
                "poo_ci_high": r.poo_ci_high,
                "mean_fitness_rate": r.mean_fitness_rate,
                "fitness_rate_se": r.fitness_rate_se,
                "mean_fitness_diff": r.mean_fitness_diff,
            }
            for r in rows
        ],
    }
    text = json.dumps(payload, indent=2) + "\n"
    if sink is not None:
        sink.write(text)
    return text
