"""NK fitness landscapes over binary decision vectors.

A landscape assigns every length-``n`` bit vector (a *genotype*) a fitness
in ``[0, 1)``.  Component ``i`` contributes a value looked up in its own
random table, keyed by the component's bit together with the bits of the
``k`` components that influence it.  Overall fitness is the weighted sum of
the ``n`` contributions.

Conventions, fixed and relied upon throughout the package:

- Components are indexed ``0 .. n-1``.
- Table keys list the component's own bit first, then the influencing
  components' bits in ascending component order.
- The ``k`` influencers of component ``i`` are the next ``k`` components
  cyclically (``i+1, ..., i+k mod n``); for ``k = n-1`` that is every other
  component.
- Enumeration order: genotype ``g`` has index ``sum(g[i] << (n-1-i))``,
  i.e. component 0 is the most significant bit.
- Table entries are drawn uniformly on ``[0, 1)`` from
  ``numpy.random.default_rng(seed)``, component-major, keys ascending.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

Genotype = tuple[int, ...]

MASK64 = 0xFFFFFFFFFFFFFFFF

WEIGHT_SUM_TOL = 1e-12

# Full fitness tables are materialized lazily up to this size; exhaustive
# optimum search works up to MAX_ENUMERATION_N by chunked scanning.
FULL_TABLE_MAX_N = 20
MAX_ENUMERATION_N = 30

_ENUM_CHUNK = 1 << 16


def _as_bits(genotype: Sequence[int], n: int) -> Genotype:
    """Normalize a genotype to a tuple of ints, enforcing arity and 0/1 values."""
    try:
        bits = tuple(int(b) for b in genotype)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"genotype must be a sequence of 0/1 values, got {genotype!r}") from exc
    if len(bits) != n:
        raise ValueError(f"genotype has {len(bits)} components, landscape expects {n}")
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"genotype bits must be 0 or 1, got {bits}")
    return bits


def genotype_to_index(genotype: Sequence[int]) -> int:
    """Enumeration index of a genotype (component 0 is the most significant bit)."""
    idx = 0
    for b in genotype:
        idx = (idx << 1) | int(b)
    return idx


def index_to_genotype(index: int, n: int) -> Genotype:
    """Inverse of :func:`genotype_to_index`."""
    return tuple((index >> (n - 1 - i)) & 1 for i in range(n))


def _validate_nk(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"component count must be >= 1, got n={n}")
    if k < 0 or k >= n:
        raise ValueError(f"interaction degree must satisfy 0 <= k <= n-1, got k={k} for n={n}")


@lru_cache(maxsize=None)
def _structure(n: int, k: int):
    """Influence lists and table-key layout for an (n, k) landscape.

    Returns (influence, cfg_cols, powers): per-component influencer tuples
    (ascending), the (n, k+1) column matrix [own, influencers...], and the
    bit weights turning a local configuration into a table index.
    """
    influence = tuple(
        tuple(sorted((i + j) % n for j in range(1, k + 1))) for i in range(n)
    )
    cfg_cols = np.empty((n, k + 1), dtype=np.intp)
    for i, infl in enumerate(influence):
        cfg_cols[i, 0] = i
        cfg_cols[i, 1:] = infl
    cfg_cols.setflags(write=False)
    powers = (1 << np.arange(k, -1, -1)).astype(np.int64)
    powers.setflags(write=False)
    return influence, cfg_cols, powers


@lru_cache(maxsize=16)
def _genotype_matrix(n: int) -> np.ndarray:
    """All 2^n genotypes as a (2^n, n) uint8 matrix in enumeration order."""
    shifts = np.arange(n - 1, -1, -1)
    m = ((np.arange(1 << n, dtype=np.int64)[:, None] >> shifts) & 1).astype(np.uint8)
    m.setflags(write=False)
    return m


@lru_cache(maxsize=16)
def _key_index_matrix(n: int, k: int) -> np.ndarray:
    """Per-component table indices for every genotype; cacheable for small n."""
    _, cfg_cols, powers = _structure(n, k)
    genos = _genotype_matrix(n)
    m = genos[:, cfg_cols].astype(np.int64) @ powers  # (2^n, n)
    m.setflags(write=False)
    return m


class Landscape:
    """An immutable NK landscape: contribution tables, weights, and evaluation.

    Fitness of genotype ``g`` is ``sum_i weights[i] * tables[i][key_i(g)]``,
    accumulated in ascending component order.  Batch and single-genotype
    evaluation use the same elementwise accumulation, so they agree
    bit-exactly; all optimality comparisons in this package rely on that.
    """

    __slots__ = ("n", "k", "seed", "tables", "weights", "influence",
                 "_cfg_cols", "_powers", "_values", "_values_list")

    def __init__(self, n: int, k: int, tables, weights=None, seed: int = 0):
        _validate_nk(n, k)
        table_arr = np.array(tables, dtype=np.float64)
        expected = (n, 1 << (k + 1))
        if table_arr.shape != expected:
            raise ValueError(
                f"tables must have shape {expected} (n rows of 2^(k+1) entries), got {table_arr.shape}"
            )
        if not ((table_arr >= 0.0) & (table_arr < 1.0)).all():
            raise ValueError("table entries must lie in [0, 1)")
        self.tables = table_arr
        self.tables.setflags(write=False)
        self.weights = _check_weights(weights, n)
        self.weights.setflags(write=False)
        self.n = n
        self.k = k
        self.seed = int(seed)
        self.influence, self._cfg_cols, self._powers = _structure(n, k)
        self._values: np.ndarray | None = None
        self._values_list: list[float] | None = None

    def __repr__(self) -> str:
        return f"Landscape(n={self.n}, k={self.k}, seed={self.seed})"

    # -- evaluation ------------------------------------------------------

    def _batch_values(self, genos: np.ndarray) -> np.ndarray:
        """Fitness of each row of a (m, n) bit matrix.

        Column-wise accumulation keeps the result bit-identical to a scalar
        loop over components in ascending order, for any batch size.
        """
        total = np.zeros(genos.shape[0])
        for i in range(self.n):
            idx = genos[:, self._cfg_cols[i]].astype(np.int64) @ self._powers
            total = total + self.weights[i] * self.tables[i, idx]
        return total

    def _compute_all_values(self) -> np.ndarray:
        if self.n <= 16:
            key_idx = _key_index_matrix(self.n, self.k)
            total = np.zeros(1 << self.n)
            rows = np.arange(self.n)
            contribs = self.tables[rows, key_idx]
            for i in range(self.n):
                total = total + self.weights[i] * contribs[:, i]
            return total
        return self._batch_values(_genotype_matrix(self.n))

    def fitness_values(self) -> np.ndarray:
        """The full fitness table in enumeration order (lazily built, cached)."""
        if self._values is None:
            if self.n > FULL_TABLE_MAX_N:
                raise ValueError(
                    f"full fitness table limited to n <= {FULL_TABLE_MAX_N}, got n={self.n}"
                )
            values = self._compute_all_values()
            values.setflags(write=False)
            self._values = values
            self._values_list = values.tolist()
        return self._values

    def fitness_at(self, index: int) -> float:
        """Fitness of the genotype with the given enumeration index."""
        if not 0 <= index < (1 << self.n):
            raise ValueError(f"genotype index {index} out of range for n={self.n}")
        if self._values_list is None and self.n <= FULL_TABLE_MAX_N:
            self.fitness_values()
        if self._values_list is not None:
            return self._values_list[index]
        row = np.array(index_to_genotype(index, self.n), dtype=np.uint8)[None, :]
        return float(self._batch_values(row)[0])

    def fitness(self, genotype: Sequence[int]) -> float:
        """Weighted-sum fitness of one genotype; pure, in [0, 1)."""
        bits = _as_bits(genotype, self.n)
        if self._values_list is not None:
            return self._values_list[genotype_to_index(bits)]
        row = np.array(bits, dtype=np.uint8)[None, :]
        return float(self._batch_values(row)[0])

    def _index_value_fn(self) -> Callable[[int], float]:
        """Fast index -> fitness accessor used by the search routines."""
        if self.n <= FULL_TABLE_MAX_N:
            self.fitness_values()
            return self._values_list.__getitem__
        return self.fitness_at

    # -- inspection ------------------------------------------------------

    def local_configuration(self, component: int, genotype: Sequence[int]) -> str:
        """Table key for a component: own bit, then influencer bits ascending."""
        if not 0 <= component < self.n:
            raise ValueError(f"component index {component} out of range [0, {self.n})")
        bits = _as_bits(genotype, self.n)
        return str(bits[component]) + "".join(str(bits[j]) for j in self.influence[component])

    def to_json(self) -> str:
        """Debug dump: n, k, seed, weights, and per-component key->value tables."""
        width = self.k + 1
        tables = [
            {format(key, f"0{width}b"): value for key, value in enumerate(row)}
            for row in self.tables.tolist()
        ]
        return json.dumps(
            {
                "n": self.n,
                "k": self.k,
                "seed": self.seed,
                "weights": self.weights.tolist(),
                "tables": tables,
            }
        )


def _check_weights(weights, n: int) -> np.ndarray:
    if weights is None:
        return np.full(n, 1.0 / n)
    w = np.array(weights, dtype=np.float64)
    if w.shape != (n,):
        raise ValueError(f"weights must have length {n}, got shape {w.shape}")
    if (w < 0.0).any():
        raise ValueError("weights must be non-negative")
    total = float(w.sum())
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise ValueError(f"weights must sum to 1.0 within {WEIGHT_SUM_TOL}, got {total!r}")
    return w


def generate_landscape(n: int, k: int, weights=None, seed: int = 0) -> Landscape:
    """Draw a fresh landscape: every table entry uniform on [0, 1).

    Identical ``(n, k, weights, seed)`` always produce a bit-identical
    landscape.  The seed is reduced modulo 2^64.
    """
    _validate_nk(n, k)
    seed = int(seed) & MASK64
    tables = np.random.default_rng(seed).random((n, 1 << (k + 1)))
    return Landscape(n, k, tables, weights=weights, seed=seed)


@dataclass(frozen=True)
class OptimumReport:
    """Exhaustive-search result: all best genotypes and their shared fitness."""

    optima: tuple[Genotype, ...]
    fitness: float

    def __contains__(self, genotype: Iterable[int]) -> bool:
        return tuple(int(b) for b in genotype) in self.optima


def enumerate_global_optimum(landscape: Landscape) -> OptimumReport:
    """Evaluate all 2^n genotypes and return every argmax under exact equality."""
    n = landscape.n
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"exhaustive enumeration limited to n <= {MAX_ENUMERATION_N}, got n={n}")
    if n <= FULL_TABLE_MAX_N:
        values = landscape.fitness_values()
        best = float(values.max())
        best_indices = [int(i) for i in np.flatnonzero(values == best)]
    else:
        best = -1.0
        best_indices = []
        shifts = np.arange(n - 1, -1, -1)
        for start in range(0, 1 << n, _ENUM_CHUNK):
            stop = min(start + _ENUM_CHUNK, 1 << n)
            chunk = ((np.arange(start, stop, dtype=np.int64)[:, None] >> shifts) & 1).astype(np.uint8)
            values = landscape._batch_values(chunk)
            chunk_best = float(values.max())
            if chunk_best > best:
                best = chunk_best
                best_indices = []
            if chunk_best == best:
                best_indices.extend(start + int(i) for i in np.flatnonzero(values == best))
    optima = tuple(index_to_genotype(i, n) for i in best_indices)
    return OptimumReport(optima=optima, fitness=best)
