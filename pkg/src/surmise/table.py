"""Judgment tables: which model judged which target correctly.

The table is the root object of the whole pipeline.  Everything downstream
(knowledge structures, the flexible order, Hasse diagrams) is a pure
function of it, so it is immutable after construction and every derived
quantity is exact integer arithmetic on its cells.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "TableError",
    "FlexibilityError",
    "TargetId",
    "ModelId",
    "PairCounts",
    "Flexibility",
    "ZERO_FLEXIBILITY",
    "JudgmentTable",
    "build_table",
    "natural_key",
    "natural_sorted",
]


class TableError(ValueError):
    """Malformed judgment-table input (bad cell, duplicate name, ...)."""


class FlexibilityError(ValueError):
    """Flexibility percentage out of range or not representable."""


def natural_key(name: str) -> tuple:
    """Sort key that orders digit runs numerically: t2 before t10.

    The raw name is appended as a tiebreak so that names with equal
    numeric value ("t01" vs "t1") still sort deterministically.
    """
    runs = tuple(
        (0, int(run)) if run.isdigit() else (1, run)
        for run in re.split(r"(\d+)", name)
        if run
    )
    return (runs, name)


def natural_sorted(names: Iterable[str]) -> list[str]:
    return sorted(names, key=natural_key)


# Names feed unescaped into CSV and DOT output, so the alphabet is
# restricted up front instead of escaping later.
_FORBIDDEN_CHARS = ('"', ",")


def _check_name(kind: str, position: int, name: str) -> None:
    if not isinstance(name, str) or not name:
        raise TableError(f"{kind} name at position {position} is empty")
    for ch in _FORBIDDEN_CHARS:
        if ch in name:
            raise TableError(
                f"{kind} name {name!r} at position {position} contains "
                f"forbidden character {ch!r}"
            )


@dataclass(frozen=True)
class TargetId:
    index: int
    name: str


@dataclass(frozen=True)
class ModelId:
    index: int
    name: str


@dataclass(frozen=True)
class PairCounts:
    """Model counts for the four response patterns on an ordered target
    pair (p, q): n1 = both correct, n2 = p only, n3 = q only, n4 = neither.
    """

    n1: int
    n2: int
    n3: int
    n4: int

    @property
    def total(self) -> int:
        return self.n1 + self.n2 + self.n3 + self.n4


@dataclass(frozen=True)
class Flexibility:
    """Tolerated share of counterexample models, stored in basis points.

    25.5% is stored as 2550.  Keeping the value integral lets every
    threshold decision be an exact cross-multiplication, so no order
    edge can flip due to floating-point rounding.  Values at or above
    50% are rejected: the order's anti-symmetry depends on it.
    """

    basis_points: int

    def __post_init__(self) -> None:
        if not isinstance(self.basis_points, int):
            raise FlexibilityError(
                f"basis points must be an integer, got {self.basis_points!r}"
            )
        if not 0 <= self.basis_points < 5000:
            raise FlexibilityError(
                f"flexibility must lie in [0%, 50%), got "
                f"{self.basis_points / 100:g}%"
            )

    @classmethod
    def parse(cls, text: str) -> "Flexibility":
        """Parse a percentage with at most two decimal digits ("19.99")."""
        m = re.fullmatch(r"(?P<sign>-?)(?P<whole>\d+)(?:\.(?P<frac>\d+))?", text.strip())
        if m is None:
            raise FlexibilityError(f"flexibility {text!r} is not a decimal percentage")
        frac = m["frac"] or ""
        if len(frac) > 2:
            raise FlexibilityError(
                f"flexibility {text!r} has more than two decimal digits"
            )
        value = int(m["whole"]) * 100 + int(frac.ljust(2, "0") or "0")
        if m["sign"]:
            value = -value
        return cls(value)

    @property
    def percent_text(self) -> str:
        """Canonical decimal rendering: 2550 -> "25.5", 1999 -> "19.99"."""
        whole, cents = divmod(self.basis_points, 100)
        if cents == 0:
            return str(whole)
        if cents % 10 == 0:
            return f"{whole}.{cents // 10}"
        return f"{whole}.{cents:02d}"


ZERO_FLEXIBILITY = Flexibility(0)


@dataclass(frozen=True)
class JudgmentTable:
    """Immutable models x targets matrix of 0/1 judgment outcomes.

    ``cells[i][j]`` is 1 iff model i judged target j correctly.  Safe for
    concurrent reads; all accessors are pure.
    """

    models: tuple[ModelId, ...]
    targets: tuple[TargetId, ...]
    cells: tuple[tuple[int, ...], ...]

    @property
    def model_count(self) -> int:
        return len(self.models)

    @property
    def target_count(self) -> int:
        return len(self.targets)

    @property
    def model_names(self) -> tuple[str, ...]:
        return tuple(m.name for m in self.models)

    @property
    def target_names(self) -> tuple[str, ...]:
        return tuple(t.name for t in self.targets)

    def _check_model_index(self, i: int) -> None:
        if not 0 <= i < len(self.models):
            raise IndexError(f"model index {i} out of range [0, {len(self.models)})")

    def _check_target_index(self, j: int) -> None:
        if not 0 <= j < len(self.targets):
            raise IndexError(f"target index {j} out of range [0, {len(self.targets)})")

    def tab(self, i: int, j: int) -> int:
        """The stored judgment of model i on target j (0 or 1)."""
        self._check_model_index(i)
        self._check_target_index(j)
        return self.cells[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        self._check_target_index(j)
        return tuple(row[j] for row in self.cells)

    def support(self, j: int) -> frozenset[int]:
        """Indices of the models that judged target j correctly."""
        self._check_target_index(j)
        return frozenset(i for i, row in enumerate(self.cells) if row[j])

    def row_members(self, i: int) -> frozenset[int]:
        """Indices of the targets model i judged correctly."""
        self._check_model_index(i)
        return frozenset(j for j, bit in enumerate(self.cells[i]) if bit)

    def pair_counts(self, p: int, q: int) -> PairCounts:
        """Count models by their (p, q) response pattern; p == q is allowed."""
        self._check_target_index(p)
        self._check_target_index(q)
        n1 = n2 = n3 = n4 = 0
        for row in self.cells:
            a, b = row[p], row[q]
            if a and b:
                n1 += 1
            elif a:
                n2 += 1
            elif b:
                n3 += 1
            else:
                n4 += 1
        return PairCounts(n1, n2, n3, n4)

    def target_index(self, name: str) -> int:
        for t in self.targets:
            if t.name == name:
                return t.index
        raise ValueError(f"unknown target name {name!r}")

    def model_index(self, name: str) -> int:
        for m in self.models:
            if m.name == name:
                return m.index
        raise ValueError(f"unknown model name {name!r}")


def build_table(
    target_names: Sequence[str],
    model_names: Sequence[str],
    bits: Sequence[Sequence[int]],
) -> JudgmentTable:
    """Validate raw input and freeze it into a JudgmentTable.

    Raises TableError with the offending row/column named when a name is
    duplicated or empty, a dimension is empty, the matrix is ragged, or a
    cell is not 0/1.
    """
    if len(target_names) == 0:
        raise TableError("table has no targets (empty column dimension)")
    if len(model_names) == 0:
        raise TableError("table has no models (empty row dimension)")

    seen: dict[str, int] = {}
    for j, name in enumerate(target_names):
        _check_name("target", j, name)
        if name in seen:
            raise TableError(
                f"duplicate target name {name!r} (columns {seen[name]} and {j})"
            )
        seen[name] = j
    seen = {}
    for i, name in enumerate(model_names):
        _check_name("model", i, name)
        if name in seen:
            raise TableError(
                f"duplicate model name {name!r} (rows {seen[name]} and {i})"
            )
        seen[name] = i

    u = len(target_names)
    if len(bits) != len(model_names):
        raise TableError(
            f"expected {len(model_names)} rows of cells, got {len(bits)}"
        )
    rows: list[tuple[int, ...]] = []
    for i, raw_row in enumerate(bits):
        row = tuple(raw_row)
        if len(row) != u:
            raise TableError(
                f"row {i} (model {model_names[i]!r}) has {len(row)} cells, "
                f"expected {u}"
            )
        for j, cell in enumerate(row):
            if not isinstance(cell, int) or cell not in (0, 1):
                raise TableError(
                    f"cell at row {i} (model {model_names[i]!r}), column {j} "
                    f"(target {target_names[j]!r}) is {cell!r}, not 0 or 1"
                )
        rows.append(tuple(int(c) for c in row))

    return JudgmentTable(
        models=tuple(ModelId(i, n) for i, n in enumerate(model_names)),
        targets=tuple(TargetId(j, n) for j, n in enumerate(target_names)),
        cells=tuple(rows),
    )
