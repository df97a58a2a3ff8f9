"""Planted prerequisite posets and seeded judgment-table generators.

These exist so hierarchy recovery can be tested end to end: plant a
poset, sample models whose correct sets are downsets of it, and check the
mined order against the planted one.  Everything here is a pure function
of its arguments (seed included).
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .hasse import transitive_closure
from .kst import KnowledgeStructure
from .table import JudgmentTable, build_table

__all__ = [
    "MAX_POSET_ELEMENTS",
    "PlantedPoset",
    "SynthSpec",
    "all_downsets",
    "sample_models",
    "random_poset",
]

# Downsets are enumerated explicitly, which is exponential in the worst
# case; the guard keeps that enumeration at desk scale.
MAX_POSET_ELEMENTS = 20


@dataclass(frozen=True)
class PlantedPoset:
    """Ground-truth prerequisite edges: (lower, upper) means lower must be
    mastered before upper.  Edges must be acyclic and self-loop free."""

    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        seen = set()
        for name in self.elements:
            if name in seen:
                raise ValueError(f"duplicate element {name!r}")
            seen.add(name)
        for lower, upper in self.covers:
            if lower not in seen or upper not in seen:
                raise ValueError(f"edge ({lower!r}, {upper!r}) mentions unknown element")
            if lower == upper:
                raise ValueError(f"self-loop on {lower!r}")
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        index = {name: i for i, name in enumerate(self.elements)}
        size = len(self.elements)
        grid = [[False] * size for _ in range(size)]
        for lower, upper in self.covers:
            grid[index[lower]][index[upper]] = True
        closed = transitive_closure(grid)
        for i in range(size):
            if closed[i][i]:
                raise ValueError(f"cycle through {self.elements[i]!r}")

    def predecessor_indices(self) -> list[set[int]]:
        index = {name: i for i, name in enumerate(self.elements)}
        preds: list[set[int]] = [set() for _ in self.elements]
        for lower, upper in self.covers:
            preds[index[upper]].add(index[lower])
        return preds


@dataclass(frozen=True)
class SynthSpec:
    poset: PlantedPoset
    model_count: int
    noise: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.model_count < 1:
            raise ValueError(f"model_count must be >= 1, got {self.model_count}")
        if not 0.0 <= self.noise <= 1.0:
            raise ValueError(f"noise must lie in [0, 1], got {self.noise}")


def all_downsets(poset: PlantedPoset) -> KnowledgeStructure:
    """Every subset closed under prerequisites, as a knowledge structure.

    The empty and full sets are always downsets, so the result is
    complete.  Enumeration walks the elements in topological order and
    branches on include/exclude, visiting each downset exactly once.
    """
    size = len(poset.elements)
    if size > MAX_POSET_ELEMENTS:
        raise ValueError(
            f"refusing to enumerate downsets of {size} elements "
            f"(limit {MAX_POSET_ELEMENTS})"
        )
    preds = poset.predecessor_indices()

    # Topological order via repeated minimum extraction (indices are the
    # tiebreak, so the walk is deterministic).
    remaining = set(range(size))
    topo: list[int] = []
    placed: set[int] = set()
    while remaining:
        for i in sorted(remaining):
            if preds[i] <= placed:
                topo.append(i)
                placed.add(i)
                remaining.remove(i)
                break
        else:
            raise ValueError("cycle in planted poset")  # unreachable after validation

    states: list[frozenset[int]] = []
    current: set[int] = set()

    def walk(position: int) -> None:
        if position == size:
            states.append(frozenset(current))
            return
        element = topo[position]
        walk(position + 1)
        if preds[element] <= current:
            current.add(element)
            walk(position + 1)
            current.remove(element)

    walk(0)
    return KnowledgeStructure(
        ground=poset.elements, states=frozenset(states), completed=True
    )


def sample_models(spec: SynthSpec) -> JudgmentTable:
    """Sample each model row uniformly from the poset's downsets, then
    flip cells independently with the configured noise probability."""
    structure = all_downsets(spec.poset)
    downsets = sorted(structure.states, key=lambda s: (len(s), sorted(s)))
    rng = random.Random(spec.seed)
    size = len(spec.poset.elements)
    rows: list[list[int]] = []
    for _ in range(spec.model_count):
        chosen = downsets[rng.randrange(len(downsets))]
        row = [1 if j in chosen else 0 for j in range(size)]
        if spec.noise > 0.0:
            row = [bit ^ (rng.random() < spec.noise) for bit in row]
        rows.append(row)
    model_names = [f"M{i + 1}" for i in range(spec.model_count)]
    return build_table(list(spec.poset.elements), model_names, rows)


def random_poset(n: int, density: float, seed: int) -> PlantedPoset:
    """Random DAG on t0..t{n-1} with edges only from lower to higher
    index, transitively reduced to its covering edges."""
    if n < 1:
        raise ValueError(f"element count must be >= 1, got {n}")
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    rng = random.Random(seed)
    elements = tuple(f"t{k}" for k in range(n))
    sampled = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                sampled[i][j] = True
    reach = transitive_closure(sampled)
    covers = [
        (elements[i], elements[j])
        for i in range(n)
        for j in range(n)
        if reach[i][j]
        and not any(k not in (i, j) and reach[i][k] and reach[k][j] for k in range(n))
    ]
    return PlantedPoset(elements=elements, covers=tuple(covers))
