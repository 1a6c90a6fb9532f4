"""Query evaluation: structural matching, filters, projection, ordering.

A result row binds every projected variable to a snapshot of its element.
Matching is node-homomorphic and edge-isomorphic: within one row distinct
node variables may land on the same node, while edge variables always bind
pairwise distinct edges. Filters use the typed comparison semantics of
``values.typed_compare`` (kind mismatches and missing attributes are false).
Rows are deduplicated over the projected variables and ordered ascending by
the bound element ids, left to right over the columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..graph import PropertyGraph
from ..values import AttrValue, typed_compare
from . import backend
from .ast import Comparison, Literal, PatternQuery, PropertyRef
from .plan import build_graph_index, compile_query


@dataclass(frozen=True)
class NodeSnapshot:
    id: int
    labels: tuple[str, ...]
    attrs: dict[str, AttrValue]

    kind = "node"

    def to_obj(self) -> dict:
        return {"kind": "node", "id": str(self.id), "labels": list(self.labels),
                "attrs": dict(self.attrs)}


@dataclass(frozen=True)
class EdgeSnapshot:
    id: int
    src: int
    dst: int
    label: str
    attrs: dict[str, AttrValue]

    kind = "edge"

    def to_obj(self) -> dict:
        return {"kind": "edge", "id": str(self.id), "label": self.label,
                "attrs": dict(self.attrs)}


Snapshot = Union[NodeSnapshot, EdgeSnapshot]


@dataclass
class ResultSet:
    columns: list[str]
    rows: list[dict[str, Snapshot]]

    def to_obj(self) -> dict:
        return {
            "columns": list(self.columns),
            "rows": [{var: row[var].to_obj() for var in self.columns} for row in self.rows],
        }


def _snapshot_node(graph: PropertyGraph, node_id: int) -> NodeSnapshot:
    node = graph.node(node_id)
    return NodeSnapshot(node.id, tuple(sorted(node.labels)), dict(node.attrs))


def _snapshot_edge(graph: PropertyGraph, edge_id: int) -> EdgeSnapshot:
    edge = graph.edge(edge_id)
    return EdgeSnapshot(edge.id, edge.src, edge.dst, edge.label, dict(edge.attrs))


def evaluate(query: PatternQuery, graph: PropertyGraph) -> ResultSet:
    index = build_graph_index(graph)
    plan = compile_query(query, index, graph)

    bindings = backend.enumerate_bindings(
        len(index.node_ids),
        len(plan.node_var_names),
        len(plan.edge_var_names),
        plan.step_kind, plan.s_a, plan.s_b, plan.s_c, plan.s_d, plan.s_e,
        plan.cand_start, plan.cand_flat, plan.has_label,
        index.out_start, index.out_edges, index.esrc, index.edst, index.elab,
    )

    declared = query.variables()
    columns = list(declared) if query.returns is None else list(query.returns)
    n_node_slots = len(plan.node_var_names)  # named and anonymous

    # (is_node, binding-tuple offset) per projected column, then per filter var
    def locate(name: str) -> tuple[bool, int]:
        if declared[name] == "node":
            return True, plan.named_nodes[name]
        return False, n_node_slots + plan.named_edges[name]

    column_slots = [locate(name) for name in columns]
    filter_slots = {}
    for comp in query.filters:
        for operand in (comp.lhs, comp.rhs):
            if isinstance(operand, PropertyRef) and operand.var not in filter_slots:
                filter_slots[operand.var] = locate(operand.var)

    def attrs_of(binding, slot: tuple[bool, int]) -> dict:
        is_node, offset = slot
        dense = binding[offset]
        if is_node:
            return graph.node(index.node_ids[dense]).attrs
        return graph.edge(index.edge_ids[dense]).attrs

    def operand_value(binding, operand):
        if isinstance(operand, Literal):
            return operand.value
        return attrs_of(binding, filter_slots[operand.var]).get(operand.key)

    def passes(binding) -> bool:
        for comp in query.filters:
            if not typed_compare(operand_value(binding, comp.lhs), comp.op,
                                 operand_value(binding, comp.rhs)):
                return False
        return True

    projected: set[tuple[int, ...]] = set()
    for binding in bindings:
        if not passes(binding):
            continue
        key = []
        for is_node, offset in column_slots:
            dense = binding[offset]
            key.append(index.node_ids[dense] if is_node else index.edge_ids[dense])
        projected.add(tuple(key))

    rows = []
    for key in sorted(projected):
        row = {}
        for name, (is_node, _), element_id in zip(columns, column_slots, key):
            row[name] = (_snapshot_node(graph, element_id) if is_node
                         else _snapshot_edge(graph, element_id))
        rows.append(row)
    return ResultSet(columns, rows)
