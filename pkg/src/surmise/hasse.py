"""Covering edges of a partial order and the layered drawing behind them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .order import OrderMatrix, verify_partial_order
from .table import natural_key

__all__ = [
    "HasseDiagram",
    "transitive_reduction",
    "assign_layers",
    "transitive_closure",
]


@dataclass(frozen=True)
class HasseDiagram:
    """Covering edges of a partial order, plus a drawing layer per node.

    An edge (lower, upper) says lower is a prerequisite of upper with
    nothing strictly between; lower is drawn below.  ``members`` maps a
    node to the equally-informative targets it stands for.
    """

    nodes: tuple[str, ...]
    members: Mapping[str, tuple[str, ...]]
    edges: tuple[tuple[str, str], ...]
    layers: Mapping[str, int]

    def layer_groups(self) -> tuple[tuple[str, ...], ...]:
        """Node names grouped by layer, bottom (no prerequisites) first."""
        if not self.nodes:
            return ()
        depth = max(self.layers.values()) + 1
        groups: list[list[str]] = [[] for _ in range(depth)]
        for node in self.nodes:
            groups[self.layers[node]].append(node)
        return tuple(tuple(sorted(g, key=natural_key)) for g in groups)


def _layers_from_edges(
    nodes: Sequence[str], edges: Sequence[tuple[str, str]]
) -> dict[str, int]:
    # Longest path from the minimal elements; Kahn's algorithm doubles as
    # the cycle detector.
    preds: dict[str, set[str]] = {n: set() for n in nodes}
    succs: dict[str, set[str]] = {n: set() for n in nodes}
    for lower, upper in edges:
        if lower not in preds or upper not in preds:
            raise ValueError(f"edge ({lower!r}, {upper!r}) mentions an unknown node")
        preds[upper].add(lower)
        succs[lower].add(upper)

    pending = {n: len(preds[n]) for n in nodes}
    ready = [n for n in nodes if pending[n] == 0]
    layers: dict[str, int] = {}
    while ready:
        node = ready.pop()
        layers[node] = max((layers[p] + 1 for p in preds[node]), default=0)
        for nxt in succs[node]:
            pending[nxt] -= 1
            if pending[nxt] == 0:
                ready.append(nxt)
    if len(layers) != len(nodes):
        stuck = sorted(set(nodes) - set(layers), key=natural_key)
        raise ValueError(f"cycle detected among {stuck}")
    return layers


def transitive_reduction(matrix: OrderMatrix) -> HasseDiagram:
    """Strip every implied edge, leaving the unique covering relation.

    A strict pair (p, r) survives iff no third node sits between them.
    The input must verify as a partial order; for one, the reflexive-
    transitive closure of the result is the original matrix.
    """
    diagnostics = verify_partial_order(matrix)
    if not diagnostics.ok:
        raise ValueError(f"not a partial order: {diagnostics.summary()}")

    reps, bits = matrix.reps, matrix.bits
    size = len(reps)
    edges = [
        (reps[i], reps[j])
        for i in range(size)
        for j in range(size)
        if i != j
        and bits[i][j]
        and not any(
            k not in (i, j) and bits[i][k] and bits[k][j] for k in range(size)
        )
    ]
    edges.sort(key=lambda e: (natural_key(e[0]), natural_key(e[1])))
    return HasseDiagram(
        nodes=reps,
        members=matrix.member_map(),
        edges=tuple(edges),
        layers=_layers_from_edges(reps, edges),
    )


def assign_layers(diagram: HasseDiagram) -> dict[str, int]:
    """Recompute the layer map from the diagram's edges.

    A node with no incoming edge sits at layer 0; otherwise one above its
    highest covering prerequisite.  Raises on a cycle, which can only
    mean the edge set was corrupted after construction.
    """
    return _layers_from_edges(diagram.nodes, diagram.edges)


def transitive_closure(
    relation: Sequence[Sequence[int]] | Sequence[Sequence[bool]],
) -> tuple[tuple[bool, ...], ...]:
    """Smallest transitive superset of a square boolean matrix (Warshall)."""
    size = len(relation)
    grid = [[bool(cell) for cell in row] for row in relation]
    for row in grid:
        if len(row) != size:
            raise ValueError("relation matrix is not square")
    for k in range(size):
        row_k = grid[k]
        for i in range(size):
            if grid[i][k]:
                row_i = grid[i]
                for j in range(size):
                    if row_k[j]:
                        row_i[j] = True
    return tuple(tuple(row) for row in grid)
