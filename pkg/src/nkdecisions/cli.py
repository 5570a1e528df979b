"""Command-line entry point.

``run`` executes built-in or custom scenarios and emits csv, json, or
scatter text; ``list`` prints the built-in catalog.  All randomness derives
from ``--seed``: identical arguments produce byte-identical output at any
worker count.  Output is assembled fully in memory before anything is
written, so a failing run never leaves a partial file.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .reporting import emit_csv, emit_json, emit_scatter_data, report_row
from .runner import RunConfig, run_scenario
from .scenarios import (
    ScenarioConfigError,
    ScenarioSpec,
    builtin_scenarios,
    parse_scenario_config,
    with_preset,
)


@dataclass(frozen=True)
class ExecutionPlan:
    """Everything a parsed command line resolves to."""

    command: str
    scenarios: tuple[ScenarioSpec, ...]
    config: RunConfig
    fmt: str
    out: Path | None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nkdecisions",
        description="Hierarchical decision making on NK fitness landscapes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run scenarios and emit results")
    run_p.add_argument("--all", action="store_true", help="run every built-in scenario (default)")
    run_p.add_argument(
        "--scenario", action="append", metavar="CODE", default=[],
        help="built-in scenario code (repeatable)",
    )
    run_p.add_argument("--config", type=Path, metavar="FILE", help="JSON custom-scenario file")
    run_p.add_argument("--trials", type=int, default=10_000, help="trials per scenario")
    run_p.add_argument("--seed", type=int, default=0, help="master seed")
    run_p.add_argument("--confidence", type=float, default=0.95, help="CI confidence level")
    run_p.add_argument(
        "--weights-preset", choices=("equal", "skewed"), metavar="NAME",
        help="override component weights of every selected scenario",
    )
    run_p.add_argument("--format", choices=("csv", "json", "scatter"), default="csv")
    run_p.add_argument("--out", type=Path, help="write output here instead of stdout")
    run_p.add_argument("--workers", type=int, default=1, help="parallel trial workers")

    sub.add_parser("list", help="print the built-in scenario catalog")
    return parser


def parse_cli(argv: list[str] | None = None) -> ExecutionPlan:
    """Resolve arguments to an execution plan; bad usage exits nonzero."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "list":
        return ExecutionPlan("list", builtin_scenarios(), RunConfig(), "csv", None)

    selections = sum((bool(args.all), bool(args.scenario), args.config is not None))
    if selections > 1:
        parser.error("use only one of --all, --scenario, --config")

    if args.config is not None:
        try:
            text = args.config.read_text()
        except OSError as exc:
            parser.error(f"cannot read config file: {exc}")
        try:
            scenarios: tuple[ScenarioSpec, ...] = (parse_scenario_config(text),)
        except ScenarioConfigError as exc:
            parser.error(str(exc))
    elif args.scenario:
        catalog = {spec.code: spec for spec in builtin_scenarios()}
        picked = []
        for code in args.scenario:
            if code not in catalog:
                parser.error(f"unknown scenario code: {code}")
            picked.append(catalog[code])
        scenarios = tuple(picked)
    else:
        scenarios = builtin_scenarios()

    if args.weights_preset:
        try:
            scenarios = tuple(with_preset(s, args.weights_preset) for s in scenarios)
        except ScenarioConfigError as exc:
            parser.error(str(exc))

    try:
        config = RunConfig(
            trials=args.trials,
            master_seed=args.seed,
            confidence=args.confidence,
            workers=args.workers,
        )
    except ValueError as exc:
        parser.error(str(exc))

    return ExecutionPlan("run", scenarios, config, args.format, args.out)


def render_plan(plan: ExecutionPlan) -> str:
    """Run every scenario in the plan and return the emitted text."""
    if not plan.scenarios:
        raise ValueError("no scenarios selected")
    rows = [report_row(spec, run_scenario(spec, plan.config)) for spec in plan.scenarios]
    if plan.fmt == "json":
        return emit_json(rows, plan.config)
    if plan.fmt == "scatter":
        return emit_scatter_data(rows)
    return emit_csv(rows)


def main(argv: list[str] | None = None) -> int:
    plan = parse_cli(argv)

    if plan.command == "list":
        for spec in plan.scenarios:
            print(f"{spec.code}  mode={spec.mode.value:7s} split={spec.split[0]}-{spec.split[1]} "
                  f"n={spec.n} k={spec.k}")
        return 0

    try:
        text = render_plan(plan)
    except (ValueError, ScenarioConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if plan.out is not None:
        try:
            plan.out.write_text(text)
        except OSError as exc:
            print(f"error: cannot write {plan.out}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
