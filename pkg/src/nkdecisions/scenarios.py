"""Scenario catalog: the fourteen built-in settings plus custom-config parsing.

A scenario fixes how many components each of the two subordinates owns,
the decision maker's mode, and the landscape parameters derived from the
split: ``n`` is the total component count and ``k`` defaults to ``n - 1``
(every component influences every other).  Built-ins come in passive/active
pairs over the splits 1-1, 1-2, 2-2, 1-3, 3-3, 2-4 and 1-5; odd codes are
passive, even codes active.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Sequence

from .agents import Mode
from .landscape import WEIGHT_SUM_TOL

BUILTIN_SPLITS: tuple[tuple[int, int], ...] = (
    (1, 1), (1, 2), (2, 2), (1, 3), (3, 3), (2, 4), (1, 5),
)

_CONFIG_FIELDS = {"code", "mode", "split", "weights", "k"}


class ScenarioConfigError(ValueError):
    """A scenario document or spec failed validation; message names the field."""


@dataclass(frozen=True)
class ScenarioSpec:
    """One simulation setting: code, decision mode, split, and landscape shape."""

    code: str
    mode: Mode
    split: tuple[int, int]
    k: int
    weights: tuple[float, ...]

    @property
    def n(self) -> int:
        return self.split[0] + self.split[1]

    @classmethod
    def build(
        cls,
        code: str,
        mode: Mode | str,
        split: Sequence[int],
        k: int | None = None,
        weights: Sequence[float] | None = None,
    ) -> "ScenarioSpec":
        """Create a validated spec; k defaults to n-1, weights to equal."""
        if isinstance(mode, str):
            try:
                mode = Mode(mode.lower())
            except ValueError as exc:
                raise ScenarioConfigError(
                    f"mode must be 'passive' or 'active', got {mode!r}"
                ) from exc
        split_t = tuple(int(s) for s in split)
        n = sum(split_t) if len(split_t) == 2 else 0
        if k is None:
            k = n - 1
        if weights is None:
            weights_t = tuple(1.0 / n for _ in range(n)) if n else ()
        else:
            weights_t = tuple(float(w) for w in weights)
        spec = cls(code=code, mode=mode, split=split_t, k=int(k), weights=weights_t)
        validate_scenario(spec)
        return spec


def validate_scenario(spec: ScenarioSpec) -> None:
    """Enforce every ScenarioSpec invariant; raises naming the offending field."""
    if not isinstance(spec.code, str) or not spec.code:
        raise ScenarioConfigError(f"code must be a non-empty string, got {spec.code!r}")
    if not isinstance(spec.mode, Mode):
        raise ScenarioConfigError(f"mode must be a Mode, got {spec.mode!r}")
    if len(spec.split) != 2:
        raise ScenarioConfigError(f"split must have exactly two entries, got {spec.split!r}")
    if any(s < 1 for s in spec.split):
        raise ScenarioConfigError(f"split entries must be >= 1, got {spec.split!r}")
    n = spec.n
    if not 0 <= spec.k <= n - 1:
        raise ScenarioConfigError(f"k must satisfy 0 <= k <= n-1 = {n - 1}, got {spec.k}")
    if len(spec.weights) != n:
        raise ScenarioConfigError(
            f"weights must have {n} entries (one per component), got {len(spec.weights)}"
        )
    if any(w < 0.0 for w in spec.weights):
        raise ScenarioConfigError(f"weights must be non-negative, got {spec.weights!r}")
    total = sum(spec.weights)
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise ScenarioConfigError(
            f"weights must sum to 1.0 within {WEIGHT_SUM_TOL}, got {total!r}"
        )


def builtin_scenarios() -> tuple[ScenarioSpec, ...]:
    """The fourteen built-in scenarios, L01..L14 in code order."""
    specs = []
    for pair, split in enumerate(BUILTIN_SPLITS):
        for offset, mode in ((1, Mode.PASSIVE), (2, Mode.ACTIVE)):
            code = f"L{2 * pair + offset:02d}"
            specs.append(ScenarioSpec.build(code=code, mode=mode, split=split))
    return tuple(specs)


def builtin_scenario(code: str) -> ScenarioSpec:
    """Look up one built-in scenario by code."""
    for spec in builtin_scenarios():
        if spec.code == code:
            return spec
    raise ScenarioConfigError(f"unknown scenario code: {code!r}")


def parse_scenario_config(text: str) -> ScenarioSpec:
    """Parse a JSON scenario document: {code, mode, split, weights?, k?}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioConfigError(f"scenario config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ScenarioConfigError("scenario config must be a JSON object")
    unknown = set(doc) - _CONFIG_FIELDS
    if unknown:
        raise ScenarioConfigError(f"unknown scenario config fields: {sorted(unknown)}")
    for field in ("code", "mode", "split"):
        if field not in doc:
            raise ScenarioConfigError(f"scenario config is missing required field {field!r}")
    if not isinstance(doc["code"], str):
        raise ScenarioConfigError(f"code must be a string, got {doc['code']!r}")
    if not isinstance(doc["mode"], str):
        raise ScenarioConfigError(f"mode must be a string, got {doc['mode']!r}")
    split = doc["split"]
    if (
        not isinstance(split, list)
        or len(split) != 2
        or not all(isinstance(s, int) and not isinstance(s, bool) for s in split)
    ):
        raise ScenarioConfigError(f"split must be an array of 2 integers, got {split!r}")
    weights = doc.get("weights")
    if weights is not None and (
        not isinstance(weights, list)
        or not all(isinstance(w, (int, float)) and not isinstance(w, bool) for w in weights)
    ):
        raise ScenarioConfigError(f"weights must be an array of numbers, got {weights!r}")
    k = doc.get("k")
    if k is not None and (not isinstance(k, int) or isinstance(k, bool)):
        raise ScenarioConfigError(f"k must be an integer, got {k!r}")
    return ScenarioSpec.build(
        code=doc["code"], mode=doc["mode"], split=split, k=k, weights=weights
    )


def scenario_to_config(spec: ScenarioSpec) -> str:
    """Serialize a spec to the JSON config format; parsing it back round-trips."""
    return json.dumps(
        {
            "code": spec.code,
            "mode": spec.mode.value,
            "split": list(spec.split),
            "k": spec.k,
            "weights": list(spec.weights),
        }
    )


def preset_weights(name: str, n: int) -> tuple[float, ...]:
    """Named weight presets.

    ``equal`` weights every component 1/n.  ``skewed`` weights the first
    component four times the rest (proportional to 4, 1, ..., 1): strong
    enough that re-running a scenario shifts its metrics measurably, which
    milder skews do not at default trial counts.
    """
    if n < 1:
        raise ValueError(f"need at least one component, got n={n}")
    if name == "equal":
        return tuple(1.0 / n for _ in range(n))
    if name == "skewed":
        total = float(n + 3)
        return (4.0 / total,) + tuple(1.0 / total for _ in range(n - 1))
    raise ScenarioConfigError(f"unknown weights preset: {name!r}")


def with_preset(spec: ScenarioSpec, preset: str) -> ScenarioSpec:
    """Copy of a spec with its weights replaced by a named preset."""
    new = replace(spec, weights=preset_weights(preset, spec.n))
    validate_scenario(new)
    return new
