"""Adjacency-matrix ingestion: practice table + weights matrix CSVs -> graph.

The practices table lists one practice per row:

    name,location,coupling,apiClient,channel
    HL:1,Hybrid,loose,Apache Milo,OPC-UA

The weights matrix has one row per practice and one column per
characteristic, headed ``<Label>:<Name>`` (e.g. ``Domain:Factory Automation``).
Each non-empty cell becomes one WEIGHT edge; an empty cell means "no edge",
which is distinct from a weight of zero.
"""

from __future__ import annotations

import csv
import io

from .graph import PropertyGraph
from .schema import (
    CHARACTERISTIC_LABELS,
    PRACTICE,
    WEIGHT,
    GraphSchema,
    default_schema,
)

PRACTICES_HEADER = ["name", "location", "coupling", "apiClient", "channel"]
LOCATIONS = ("OnDevice", "Hybrid")
COUPLINGS = ("tight", "loose")


class MatrixError(ValueError):
    """Base class for matrix ingestion errors."""


class MalformedTable(MatrixError):
    pass


class UnknownCharacteristicLabel(MatrixError):
    def __init__(self, label: str, header: str):
        self.label = label
        super().__init__(f"unknown characteristic label {label!r} in column {header!r}")


class WeightOutOfRange(MatrixError):
    def __init__(self, practice: str, column: str, value: float, lo: float, hi: float):
        self.value = value
        super().__init__(
            f"weight {value!r} for {practice!r} / {column!r} is outside [{lo}, {hi}]"
        )


def _rows(data: bytes, what: str) -> list[list[str]]:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MalformedTable(f"{what} is not UTF-8: {exc}") from None
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise MalformedTable(f"{what} is empty")
    return rows


def _weight_range(schema: GraphSchema) -> tuple[float, float]:
    for rule in schema.edge_rules:
        attr = rule.required_attrs.get("value")
        if rule.edge_label == WEIGHT and attr is not None:
            lo = attr.min_value if attr.min_value is not None else float("-inf")
            hi = attr.max_value if attr.max_value is not None else float("inf")
            return lo, hi
    return float("-inf"), float("inf")


def import_matrix(
    practices_csv: bytes,
    weights_csv: bytes,
    schema: GraphSchema | None = None,
    *,
    strict: bool = True,
) -> PropertyGraph:
    """Build a graph from the two CSV tables.

    One Practice node per table row, one characteristic node per matrix
    column, one WEIGHT edge per non-empty cell. With ``strict`` (the
    default), cell values outside the schema's declared weight range raise
    ``WeightOutOfRange``; without it they are imported as-is and left for
    ``validate`` to report.
    """
    schema = schema or default_schema()
    graph = PropertyGraph()

    rows = _rows(practices_csv, "practices table")
    if rows[0] != PRACTICES_HEADER:
        raise MalformedTable(
            f"practices table header must be {','.join(PRACTICES_HEADER)!r}, "
            f"got {','.join(rows[0])!r}"
        )
    practice_ids: dict[str, int] = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(PRACTICES_HEADER):
            raise MalformedTable(f"practices table line {lineno}: expected 5 fields, got {len(row)}")
        name, location, coupling, api_client, channel = row
        if not name:
            raise MalformedTable(f"practices table line {lineno}: empty practice name")
        if name in practice_ids:
            raise MalformedTable(f"practices table line {lineno}: duplicate practice {name!r}")
        if location not in LOCATIONS:
            raise MalformedTable(
                f"practices table line {lineno}: location must be one of {LOCATIONS}, got {location!r}"
            )
        if coupling not in COUPLINGS:
            raise MalformedTable(
                f"practices table line {lineno}: coupling must be one of {COUPLINGS}, got {coupling!r}"
            )
        practice_ids[name] = graph.add_node(
            {PRACTICE, location},
            {"name": name, "coupling": coupling, "apiClient": api_client, "channel": channel},
        )

    rows = _rows(weights_csv, "weights matrix")
    header = rows[0]
    if not header or header[0] != "name":
        raise MalformedTable("weights matrix header must start with 'name'")
    columns: list[tuple[str, int]] = []  # (header text, node id)
    seen_columns = set()
    for cell in header[1:]:
        label, sep, char_name = cell.partition(":")
        if not sep or not char_name:
            raise MalformedTable(f"matrix column {cell!r} must look like '<Label>:<Name>'")
        if label not in CHARACTERISTIC_LABELS:
            raise UnknownCharacteristicLabel(label, cell)
        if cell in seen_columns:
            raise MalformedTable(f"duplicate matrix column {cell!r}")
        seen_columns.add(cell)
        columns.append((cell, graph.add_node({label}, {"name": char_name})))

    lo, hi = _weight_range(schema)
    seen_rows = set()
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise MalformedTable(
                f"weights matrix line {lineno}: expected {len(header)} fields, got {len(row)}"
            )
        name = row[0]
        if name not in practice_ids:
            raise MalformedTable(f"weights matrix line {lineno}: unknown practice {name!r}")
        if name in seen_rows:
            raise MalformedTable(f"weights matrix line {lineno}: duplicate row for {name!r}")
        seen_rows.add(name)
        for (column, char_id), cell in zip(columns, row[1:]):
            if cell == "":
                continue
            try:
                value = float(cell)
            except ValueError:
                raise MalformedTable(
                    f"weights matrix line {lineno}: cell {cell!r} is not a number"
                ) from None
            if value != value or value in (float("inf"), float("-inf")):
                raise MalformedTable(f"weights matrix line {lineno}: cell must be finite")
            if strict and not lo <= value <= hi:
                raise WeightOutOfRange(name, column, value, lo, hi)
            graph.add_edge(practice_ids[name], char_id, WEIGHT, {"value": value})
    return graph


def export_matrix(graph: PropertyGraph) -> tuple[bytes, bytes]:
    """Inverse of ``import_matrix``: write the two CSV tables back out.

    Practices and characteristic columns appear in node-id order, which for
    an imported graph reproduces the input row/column order. Cells hold the
    WEIGHT edge value (the mean, if parallel edges exist) or are empty.
    """
    practices = []
    characteristics = []
    for node in graph.nodes():
        if PRACTICE in node.labels:
            practices.append(node)
        else:
            for label in CHARACTERISTIC_LABELS:
                if label in node.labels:
                    characteristics.append((node, label))
                    break

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(PRACTICES_HEADER)
    for node in practices:
        location = next((lab for lab in LOCATIONS if lab in node.labels), "")
        writer.writerow(
            [
                node.attrs.get("name", ""),
                location,
                node.attrs.get("coupling", ""),
                node.attrs.get("apiClient", ""),
                node.attrs.get("channel", ""),
            ]
        )
    practices_csv = out.getvalue().encode("utf-8")

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["name"] + [f"{label}:{node.attrs.get('name', '')}" for node, label in characteristics])
    for practice in practices:
        row = [practice.attrs.get("name", "")]
        for node, _label in characteristics:
            values = [
                e.attrs["value"]
                for e in graph.edges_between(practice.id, node.id)
                if e.label == WEIGHT and isinstance(e.attrs.get("value"), (int, float))
                and not isinstance(e.attrs.get("value"), bool)
            ]
            row.append(repr(sum(values) / len(values)) if values else "")
        writer.writerow(row)
    return practices_csv, out.getvalue().encode("utf-8")
