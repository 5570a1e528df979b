"""One-level decision hierarchy: masked local search plus a final decision.

An episode starts from a random *status quo* genotype.  Each of two
subordinates owns a disjoint set of components and hill-climbs only inside
that set, holding everything else at the status quo; both search from the
same starting point, unaware of each other.  Their proposals are assembled
into one genotype.  A *passive* decision maker adopts the assembly as-is;
an *active* one continues hill-climbing over all components.

Search is steepest-ascent with strict improvement: at each step every
permitted single-bit flip is evaluated, the best strictly-improving
neighbor is taken, and ties are broken toward the lowest component index.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .landscape import Genotype, Landscape, _as_bits, genotype_to_index, index_to_genotype


class Mode(str, Enum):
    """Decision-maker behavior after assembly."""

    PASSIVE = "passive"
    ACTIVE = "active"


@dataclass(frozen=True)
class DecisionAssignment:
    """Partition of the components into one mask per subordinate."""

    masks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        normalized = tuple(tuple(sorted(int(c) for c in mask)) for mask in self.masks)
        object.__setattr__(self, "masks", normalized)
        if len(normalized) != 2:
            raise ValueError(f"exactly two subordinates are supported, got {len(normalized)} masks")
        seen: set[int] = set()
        for mask in normalized:
            if not mask:
                raise ValueError("each subordinate mask must be non-empty")
            if len(set(mask)) != len(mask):
                raise ValueError(f"mask {mask} contains duplicate components")
            if seen & set(mask):
                raise ValueError("subordinate masks must be disjoint")
            seen.update(mask)
        if seen != set(range(len(seen))):
            raise ValueError(f"masks must partition components 0..{len(seen) - 1}, got {sorted(seen)}")

    @classmethod
    def from_split(cls, n_a: int, n_b: int) -> "DecisionAssignment":
        """Contiguous assignment: A gets the first n_a components, B the rest."""
        if n_a < 1 or n_b < 1:
            raise ValueError(f"each subordinate needs at least one component, got split ({n_a}, {n_b})")
        return cls((tuple(range(n_a)), tuple(range(n_a, n_a + n_b))))

    @property
    def n(self) -> int:
        return sum(len(m) for m in self.masks)


@dataclass(frozen=True)
class Proposal:
    """One subordinate's chosen values for its own components (mask order)."""

    subordinate: int
    bits: tuple[int, ...]


@dataclass(frozen=True)
class EpisodeOutcome:
    """Everything one episode produced, from status quo to final decision."""

    status_quo: Genotype
    proposals: tuple[Proposal, ...]
    assembled: Genotype
    final: Genotype
    final_fitness: float


def _check_mask(mask: Iterable[int], n: int) -> tuple[int, ...]:
    comps = sorted(int(c) for c in mask)
    if not comps:
        raise ValueError("search mask must be non-empty")
    if len(set(comps)) != len(comps):
        raise ValueError(f"search mask contains duplicates: {comps}")
    if comps[0] < 0 or comps[-1] >= n:
        raise ValueError(f"search mask {comps} out of range for n={n}")
    return tuple(comps)


def climb_path(landscape: Landscape, start: Sequence[int], mask: Iterable[int]) -> list[Genotype]:
    """Steepest-ascent trajectory within a mask, start first, local optimum last.

    Each step flips the masked bit giving the largest strict fitness gain
    (lowest component index on ties), so successive entries have strictly
    increasing fitness and no genotype repeats.
    """
    n = landscape.n
    bits = _as_bits(start, n)
    comps = _check_mask(mask, n)
    value = landscape._index_value_fn()
    flips = [1 << (n - 1 - c) for c in comps]
    x = genotype_to_index(bits)
    fx = value(x)
    path = [x]
    while True:
        best, best_f = x, fx
        for flip in flips:
            y = x ^ flip
            fy = value(y)
            if fy > best_f:
                best, best_f = y, fy
        if best == x:
            break
        x, fx = best, best_f
        path.append(x)
    return [index_to_genotype(i, n) for i in path]


def steepest_ascent(landscape: Landscape, start: Sequence[int], mask: Iterable[int]) -> Genotype:
    """Local optimum reached from ``start`` flipping only masked components."""
    return climb_path(landscape, start, mask)[-1]


def subordinate_propose(
    landscape: Landscape,
    status_quo: Sequence[int],
    mask: Iterable[int],
    subordinate: int = 0,
) -> Proposal:
    """Masked search from the status quo, reported as the subordinate's proposal."""
    final = steepest_ascent(landscape, status_quo, mask)
    comps = _check_mask(mask, landscape.n)
    return Proposal(subordinate=subordinate, bits=tuple(final[c] for c in comps))


def assemble(
    status_quo: Sequence[int],
    proposals: Sequence[Proposal],
    assignment: DecisionAssignment,
) -> Genotype:
    """Combine one proposal per subordinate into a full genotype.

    The masks partition the components, so the result is fully determined by
    the proposals; the status quo only fixes the expected arity.  Proposal
    order is irrelevant.
    """
    n = assignment.n
    bits = list(_as_bits(status_quo, n))
    if len(proposals) != len(assignment.masks):
        raise ValueError(
            f"assembly needs exactly {len(assignment.masks)} proposals, got {len(proposals)}"
        )
    seen: set[int] = set()
    for proposal in proposals:
        s = proposal.subordinate
        if s in seen:
            raise ValueError(f"duplicate proposal for subordinate {s}")
        if not 0 <= s < len(assignment.masks):
            raise ValueError(f"proposal references unknown subordinate {s}")
        seen.add(s)
        mask = assignment.masks[s]
        if len(proposal.bits) != len(mask):
            raise ValueError(
                f"proposal for subordinate {s} has {len(proposal.bits)} bits, mask has {len(mask)}"
            )
        for component, bit in zip(mask, proposal.bits):
            b = int(bit)
            if b not in (0, 1):
                raise ValueError(f"proposal bits must be 0 or 1, got {proposal.bits}")
            bits[component] = b
    return tuple(bits)


def decide(landscape: Landscape, assembled: Sequence[int], mode: Mode) -> Genotype:
    """Final decision: passive adopts the assembly, active re-searches all components."""
    bits = _as_bits(assembled, landscape.n)
    if mode is Mode.PASSIVE:
        return bits
    return steepest_ascent(landscape, bits, range(landscape.n))


def run_episode_from(
    landscape: Landscape,
    status_quo: Sequence[int],
    assignment: DecisionAssignment,
    mode: Mode,
) -> EpisodeOutcome:
    """Run one episode from a given status quo (both subordinates share it)."""
    if assignment.n != landscape.n:
        raise ValueError(
            f"assignment covers {assignment.n} components, landscape has {landscape.n}"
        )
    sq = _as_bits(status_quo, landscape.n)
    proposals = tuple(
        subordinate_propose(landscape, sq, mask, subordinate=s)
        for s, mask in enumerate(assignment.masks)
    )
    assembled = assemble(sq, proposals, assignment)
    final = decide(landscape, assembled, mode)
    return EpisodeOutcome(
        status_quo=sq,
        proposals=proposals,
        assembled=assembled,
        final=final,
        final_fitness=landscape.fitness(final),
    )


def run_episode(
    landscape: Landscape,
    assignment: DecisionAssignment,
    mode: Mode,
    rng: np.random.Generator,
) -> EpisodeOutcome:
    """Draw a uniform status quo from ``rng`` and run one episode."""
    status_quo = tuple(int(b) for b in rng.integers(0, 2, size=landscape.n))
    return run_episode_from(landscape, status_quo, assignment, mode)
