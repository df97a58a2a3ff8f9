"""The flexible prerequisite order over a judgment table.

An edge p -> q is accepted when at most a fixed percentage of the models
that split on the pair judged q correctly while missing p.  At 0%
flexibility this is exactly support containment.  Mutually ordered
targets are equivalent (for any flexibility below 50% this collapses to
"identical columns"), so the order matrix lives on class representatives
and is a genuine partial order: reflexive, anti-symmetric, transitive.
"""
from __future__ import annotations

from dataclasses import dataclass

from .table import (
    Flexibility,
    JudgmentTable,
    PairCounts,
    ZERO_FLEXIBILITY,
    natural_key,
    natural_sorted,
)

__all__ = [
    "OrderAxiomError",
    "EquivalenceClasses",
    "OrderMatrix",
    "OrderDiagnostics",
    "flexible_leq",
    "equivalence_classes",
    "order_matrix",
    "verify_partial_order",
]


class OrderAxiomError(RuntimeError):
    """An order matrix failed verification; this signals a bug, not bad data."""


def flexible_leq(
    counts: PairCounts, alpha: Flexibility, same_target: bool = False
) -> bool:
    """Threshold test for p -> q given the pair's response counts.

    Holds when the pair is reflexive, when no model splits on the pair
    (n2 + n3 = 0, which covers identical columns), or when the share of
    q-only models among the splitters is at most alpha.  The comparison
    is the exact cross-multiplication 10000*n3 <= bp*(n2+n3).
    """
    if same_target:
        return True
    split = counts.n2 + counts.n3
    if split == 0:
        return True
    return 10000 * counts.n3 <= alpha.basis_points * split


@dataclass(frozen=True)
class EquivalenceClasses:
    """Partition of the targets by mutual order (= identical columns).

    Members of a block are natural-sorted; a block is labeled by its LAST
    member, which subsumes the earlier ones (a class {t0, t1} reads
    "t1 (=t0)").  Blocks are ordered by that label.
    """

    blocks: tuple[tuple[str, ...], ...]

    @property
    def representatives(self) -> tuple[str, ...]:
        return tuple(block[-1] for block in self.blocks)

    def block_of(self, name: str) -> tuple[str, ...]:
        for block in self.blocks:
            if name in block:
                return block
        raise ValueError(f"unknown target {name!r}")

    def members_of(self, representative: str) -> tuple[str, ...]:
        for block in self.blocks:
            if block[-1] == representative:
                return block
        raise ValueError(f"no class labeled {representative!r}")


def equivalence_classes(
    table: JudgmentTable, alpha: Flexibility = ZERO_FLEXIBILITY
) -> EquivalenceClasses:
    """Group targets that are ordered both ways at the given flexibility.

    Mutual order below 50% flexibility forces n2 = n3 = 0, i.e. identical
    judgment columns, so membership can be decided against any one block
    member.
    """
    names = table.target_names
    blocks: list[list[int]] = []
    for j in range(table.target_count):
        for block in blocks:
            anchor = block[0]
            if flexible_leq(table.pair_counts(j, anchor), alpha) and flexible_leq(
                table.pair_counts(anchor, j), alpha
            ):
                block.append(j)
                break
        else:
            blocks.append([j])
    named = [
        tuple(natural_sorted(names[j] for j in block)) for block in blocks
    ]
    named.sort(key=lambda block: natural_key(block[-1]))
    return EquivalenceClasses(blocks=tuple(named))


@dataclass(frozen=True)
class OrderMatrix:
    """Boolean matrix of the prerequisite order over class representatives.

    ``bits[i][j]`` means reps[i] -> reps[j] (reps[i] is a prerequisite of
    reps[j]).  ``classes`` carries the member lists behind each
    representative; hand-built matrices may omit it.
    """

    reps: tuple[str, ...]
    bits: tuple[tuple[bool, ...], ...]
    classes: EquivalenceClasses | None = None

    def index_of(self, name: str) -> int:
        try:
            return self.reps.index(name)
        except ValueError:
            raise ValueError(f"unknown representative {name!r}") from None

    def holds(self, p: str, q: str) -> bool:
        return self.bits[self.index_of(p)][self.index_of(q)]

    def pairs(self) -> tuple[tuple[str, str], ...]:
        """All strict ordered pairs (p, q), natural-sorted."""
        out = [
            (self.reps[i], self.reps[j])
            for i in range(len(self.reps))
            for j in range(len(self.reps))
            if i != j and self.bits[i][j]
        ]
        out.sort(key=lambda pq: (natural_key(pq[0]), natural_key(pq[1])))
        return tuple(out)

    def member_map(self) -> dict[str, tuple[str, ...]]:
        if self.classes is None:
            return {rep: (rep,) for rep in self.reps}
        return {rep: self.classes.members_of(rep) for rep in self.reps}

    @classmethod
    def from_pairs(
        cls, elements: list[str] | tuple[str, ...], pairs: set[tuple[str, str]] | list[tuple[str, str]]
    ) -> "OrderMatrix":
        """Build a matrix from strict pairs plus the reflexive diagonal.

        No verification is done here; feed the result to
        verify_partial_order to interrogate it.
        """
        reps = tuple(natural_sorted(elements))
        index = {name: i for i, name in enumerate(reps)}
        size = len(reps)
        grid = [[i == j for j in range(size)] for i in range(size)]
        for p, q in pairs:
            grid[index[p]][index[q]] = True
        return cls(reps=reps, bits=tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class OrderDiagnostics:
    """Pass/fail per order axiom, with a counterexample where one fails."""

    reflexive: bool
    antisymmetric: bool
    transitive: bool
    reflexivity_witness: str | None = None
    antisymmetry_witness: tuple[str, str] | None = None
    transitivity_witness: tuple[str, str, str] | None = None

    @property
    def ok(self) -> bool:
        return self.reflexive and self.antisymmetric and self.transitive

    def summary(self) -> str:
        parts = []
        if self.reflexive:
            parts.append("reflexivity: pass")
        else:
            parts.append(f"reflexivity: FAIL at {self.reflexivity_witness!r}")
        if self.antisymmetric:
            parts.append("anti-symmetry: pass")
        else:
            p, q = self.antisymmetry_witness  # type: ignore[misc]
            parts.append(f"anti-symmetry: FAIL at ({p!r}, {q!r})")
        if self.transitive:
            parts.append("transitivity: pass")
        else:
            p, q, r = self.transitivity_witness  # type: ignore[misc]
            parts.append(f"transitivity: FAIL at ({p!r}, {q!r}, {r!r})")
        return "; ".join(parts)


def verify_partial_order(matrix: OrderMatrix) -> OrderDiagnostics:
    """Check reflexivity, anti-symmetry and transitivity; never raises."""
    reps, bits = matrix.reps, matrix.bits
    size = len(reps)

    reflexive, reflexive_witness = True, None
    for i in range(size):
        if not bits[i][i]:
            reflexive, reflexive_witness = False, reps[i]
            break

    antisymmetric, antisymmetry_witness = True, None
    for i in range(size):
        for j in range(i + 1, size):
            if bits[i][j] and bits[j][i]:
                antisymmetric, antisymmetry_witness = False, (reps[i], reps[j])
                break
        if not antisymmetric:
            break

    transitive, transitivity_witness = True, None
    for i in range(size):
        for j in range(size):
            if not bits[i][j]:
                continue
            for k in range(size):
                if bits[j][k] and not bits[i][k]:
                    transitive = False
                    transitivity_witness = (reps[i], reps[j], reps[k])
                    break
            if not transitive:
                break
        if not transitive:
            break

    return OrderDiagnostics(
        reflexive=reflexive,
        antisymmetric=antisymmetric,
        transitive=transitive,
        reflexivity_witness=reflexive_witness,
        antisymmetry_witness=antisymmetry_witness,
        transitivity_witness=transitivity_witness,
    )


def order_matrix(
    table: JudgmentTable, alpha: Flexibility = ZERO_FLEXIBILITY
) -> OrderMatrix:
    """The prerequisite order over class representatives.

    Each decision uses the counts of the representatives' own columns
    (any member would give the same counts).  The result is verified
    against the three order axioms; a failure is an internal bug and is
    raised, never ignored.
    """
    classes = equivalence_classes(table, alpha)
    reps = classes.representatives
    columns = [table.target_index(rep) for rep in reps]
    bits = tuple(
        tuple(
            flexible_leq(
                table.pair_counts(columns[i], columns[j]), alpha, same_target=i == j
            )
            for j in range(len(reps))
        )
        for i in range(len(reps))
    )
    matrix = OrderMatrix(reps=reps, bits=bits, classes=classes)
    diagnostics = verify_partial_order(matrix)
    if not diagnostics.ok:
        raise OrderAxiomError(
            f"order axioms violated on {len(reps)} representatives: "
            f"{diagnostics.summary()}"
        )
    return matrix
