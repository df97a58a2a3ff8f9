"""File formats: CSV tables in, JSON/DOT/text reports out.

Every emitter is byte-deterministic for a given input: collections are
natural-sorted, JSON key order is fixed, and all numbers are integers
(the flexibility is echoed as decimal text as well, so consumers never
re-round it).
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .hasse import HasseDiagram, transitive_reduction
from .kst import (
    KnowledgeStructure,
    discriminative_reduction,
    equally_informative,
    is_discriminative,
    states_containing,
)
from .order import EquivalenceClasses, order_matrix
from .table import (
    Flexibility,
    JudgmentTable,
    PairCounts,
    ZERO_FLEXIBILITY,
    build_table,
    natural_key,
)

__all__ = [
    "CsvError",
    "AnalysisReport",
    "parse_csv",
    "emit_csv",
    "emit_dot",
    "emit_report",
    "hasse_json",
    "structure_report",
    "analyze",
]


class CsvError(ValueError):
    """Malformed CSV input, with the offending row/column in the message."""


def parse_csv(data: bytes | str) -> JudgmentTable:
    """Read a judgment table from CSV bytes (UTF-8, LF or CRLF).

    Layout: the header's first cell is reserved (ignored), the rest are
    target names; each body row is a model name followed by "0"/"1"
    cells.  Name and shape validation is shared with build_table.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CsvError(f"input is not valid UTF-8: {exc}") from None
    else:
        text = data
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [line[:-1] if line.endswith("\r") else line for line in lines]
    if not lines or all(line == "" for line in lines):
        raise CsvError("empty CSV input")

    header = lines[0].split(",")
    target_names = header[1:]
    if not target_names:
        raise CsvError("header row declares no targets")
    width = len(header)

    model_names: list[str] = []
    rows: list[list[int]] = []
    for line_number, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != width:
            raise CsvError(
                f"row at line {line_number} has {len(cells)} cells, "
                f"expected {width}"
            )
        model_names.append(cells[0])
        row: list[int] = []
        for column, cell in enumerate(cells[1:], start=1):
            if cell == "0":
                row.append(0)
            elif cell == "1":
                row.append(1)
            else:
                raise CsvError(
                    f"cell at line {line_number}, column {column} "
                    f"(target {target_names[column - 1]!r}) is {cell!r}, "
                    f"expected '0' or '1'"
                )
        rows.append(row)
    if not rows:
        raise CsvError("CSV has a header but no model rows")
    return build_table(target_names, model_names, rows)


def emit_csv(table: JudgmentTable) -> str:
    lines = ["model," + ",".join(table.target_names)]
    for i, model in enumerate(table.models):
        lines.append(model.name + "," + ",".join(str(c) for c in table.cells[i]))
    return "\n".join(lines) + "\n"


def _node_label(node: str, members: tuple[str, ...]) -> str:
    subsumed = [m for m in members if m != node]
    if not subsumed:
        return node
    return f"{node} (={','.join(subsumed)})"


def emit_dot(diagram: HasseDiagram) -> str:
    """Graphviz text for the diagram; rankdir=BT puts prerequisites below."""
    lines = ["digraph hierarchy {", "  rankdir=BT;"]
    for node in diagram.nodes:
        label = _node_label(node, diagram.members[node])
        lines.append(f'  "{node}" [label="{label}"];')
    for lower, upper in diagram.edges:
        lines.append(f'  "{lower}" -> "{upper}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the pipeline derives from one table at one flexibility.

    ``relation`` holds the strict ordered pairs, ``hasse`` the covering
    subset of them, ``layers`` the node names per drawing layer; all
    names are class representatives.  ``counts`` is optional per-pair
    response counts.
    """

    targets: tuple[str, ...]
    flexibility: Flexibility
    classes: EquivalenceClasses
    relation: tuple[tuple[str, str], ...]
    hasse: tuple[tuple[str, str], ...]
    layers: tuple[tuple[str, ...], ...]
    counts: tuple[tuple[str, str, PairCounts], ...] | None = None


def analyze(
    table: JudgmentTable,
    alpha: Flexibility = ZERO_FLEXIBILITY,
    include_counts: bool = False,
) -> AnalysisReport:
    """Run the full pipeline: classes, order, covering edges, layers."""
    matrix = order_matrix(table, alpha)
    diagram = transitive_reduction(matrix)
    classes = matrix.classes
    if classes is None:
        classes = EquivalenceClasses(blocks=tuple((rep,) for rep in matrix.reps))
    counts = None
    if include_counts:
        column = {rep: table.target_index(rep) for rep in matrix.reps}
        counts = tuple(
            (p, q, table.pair_counts(column[p], column[q]))
            for p in matrix.reps
            for q in matrix.reps
            if p != q
        )
    return AnalysisReport(
        targets=table.target_names,
        flexibility=alpha,
        classes=classes,
        relation=matrix.pairs(),
        hasse=diagram.edges,
        layers=diagram.layer_groups(),
        counts=counts,
    )


def _report_object(report: AnalysisReport) -> dict:
    obj: dict = {
        "targets": list(report.targets),
        "flexibility": {
            "percent": report.flexibility.percent_text,
            "basis_points": report.flexibility.basis_points,
        },
        "classes": [
            {"representative": block[-1], "members": list(block)}
            for block in report.classes.blocks
        ],
        "relation": [list(pair) for pair in report.relation],
        "hasse": [list(pair) for pair in report.hasse],
        "layers": [list(group) for group in report.layers],
    }
    if report.counts is not None:
        obj["counts"] = [
            {"p": p, "q": q, "n1": c.n1, "n2": c.n2, "n3": c.n3, "n4": c.n4}
            for p, q, c in report.counts
        ]
    return obj


def _report_text(report: AnalysisReport) -> str:
    lines = [
        "targets: " + " ".join(report.targets),
        f"flexibility: {report.flexibility.percent_text}% "
        f"({report.flexibility.basis_points} basis points)",
        "classes:",
    ]
    for block in report.classes.blocks:
        lines.append(f"  {block[-1]}: " + " ".join(block))
    lines.append(f"relation ({len(report.relation)}):")
    for p, q in report.relation:
        lines.append(f"  {p} -> {q}")
    lines.append(f"hasse ({len(report.hasse)}):")
    for p, q in report.hasse:
        lines.append(f"  {p} -> {q}")
    lines.append("layers:")
    for level, group in enumerate(report.layers):
        lines.append(f"  {level}: " + " ".join(group))
    if report.counts is not None:
        lines.append("counts:")
        for p, q, c in report.counts:
            lines.append(f"  {p},{q}: n1={c.n1} n2={c.n2} n3={c.n3} n4={c.n4}")
    return "\n".join(lines) + "\n"


def emit_report(report: AnalysisReport, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(_report_object(report), indent=2) + "\n"
    if fmt == "text":
        return _report_text(report)
    raise ValueError(f"unknown report format {fmt!r} (expected 'json' or 'text')")


def hasse_json(diagram: HasseDiagram) -> str:
    obj = {
        "nodes": [
            {"name": node, "members": list(diagram.members[node])}
            for node in diagram.nodes
        ],
        "edges": [list(edge) for edge in diagram.edges],
        "layers": [list(group) for group in diagram.layer_groups()],
    }
    return json.dumps(obj, indent=2) + "\n"


def _format_state(structure: KnowledgeStructure, state: frozenset[int]) -> str:
    return "{" + ",".join(structure.names_of(state)) + "}"


def structure_report(structure: KnowledgeStructure) -> str:
    """Text rendering of a structure: states, per-target state families,
    the concept partition, and the discriminative reduction."""
    states = structure.sorted_states()
    lines = ["targets: " + " ".join(structure.ground)]
    lines.append(f"states ({len(states)}):")
    for state in states:
        lines.append("  " + _format_state(structure, state))
    for name in structure.ground:
        family = states_containing(structure, name)
        ordered = [s for s in states if s in family]
        rendered = " ".join(_format_state(structure, s) for s in ordered)
        lines.append(f"K_{name}:" + (" " + rendered if rendered else ""))
    partition = equally_informative(structure)
    lines.append(
        "concepts: " + " ".join("{" + ",".join(block) + "}" for block in partition.blocks)
    )
    lines.append(f"discriminative: {'true' if is_discriminative(structure) else 'false'}")
    reduced = discriminative_reduction(structure)
    lines.append("reduction targets: " + " ".join(reduced.ground))
    reduced_states = reduced.sorted_states()
    lines.append(f"reduction states ({len(reduced_states)}):")
    for state in reduced_states:
        lines.append("  " + _format_state(reduced, state))
    return "\n".join(lines) + "\n"
