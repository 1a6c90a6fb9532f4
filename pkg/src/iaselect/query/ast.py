"""Pattern-query AST and its canonical text rendering.

The grammar, in EBNF:

    query  := MATCH path (',' path)* (WHERE comp (AND comp)*)? RETURN ('*' | ident (',' ident)*)
    path   := node (edge node)*
    node   := '(' ident? (':' label)? ')'
    edge   := '-[' ident? (':' label)? ']->'
    comp   := operand ('=' | '<>' | '<' | '<=' | '>' | '>=') operand
    operand := ident '.' ident | string | number | true | false

Edges are always directed left-to-right; filters are conjunctive. A variable
name denotes the same element wherever it reappears, and may not be used
both as a node and as an edge variable. ``pretty_print`` produces the
canonical single-spaced form, a fixed point of ``parse``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

COMPARATORS = ("=", "<>", "<", "<=", ">", ">=")


@dataclass(frozen=True)
class NodePattern:
    var: str | None = None
    label: str | None = None


@dataclass(frozen=True)
class EdgePattern:
    var: str | None = None
    label: str | None = None


@dataclass(frozen=True)
class PathPattern:
    nodes: tuple[NodePattern, ...]
    edges: tuple[EdgePattern, ...] = ()

    def __post_init__(self):
        if len(self.nodes) != len(self.edges) + 1:
            raise ValueError("a path alternates nodes and edges, ending on a node")


@dataclass(frozen=True)
class PropertyRef:
    var: str
    key: str


@dataclass(frozen=True)
class Literal:
    value: Union[str, float, bool]


Operand = Union[PropertyRef, Literal]


@dataclass(frozen=True)
class Comparison:
    lhs: Operand
    op: str
    rhs: Operand

    def __post_init__(self):
        if self.op not in COMPARATORS:
            raise ValueError(f"unknown comparator {self.op!r}")
        if not (isinstance(self.lhs, PropertyRef) or isinstance(self.rhs, PropertyRef)):
            raise ValueError("a comparison must reference at least one variable")


@dataclass(frozen=True)
class PatternQuery:
    paths: tuple[PathPattern, ...]
    filters: tuple[Comparison, ...] = ()
    returns: tuple[str, ...] | None = None  # None means RETURN *

    def variables(self) -> dict[str, str]:
        """Declared variables in declaration order, mapped to 'node' or 'edge'."""
        declared: dict[str, str] = {}
        for path in self.paths:
            for i, node in enumerate(path.nodes):
                if node.var is not None and node.var not in declared:
                    declared[node.var] = "node"
                if i < len(path.edges):
                    edge = path.edges[i]
                    if edge.var is not None and edge.var not in declared:
                        declared[edge.var] = "edge"
        return declared


def format_number(value: float) -> str:
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def format_string(value: str) -> str:
    escaped = value.replace("\\", "\\\\").replace('"', '\\"')
    escaped = escaped.replace("\n", "\\n").replace("\t", "\\t").replace("\r", "\\r")
    return f'"{escaped}"'


def _format_literal(literal: Literal) -> str:
    value = literal.value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return format_string(value)
    return format_number(float(value))


def _format_operand(operand: Operand) -> str:
    if isinstance(operand, PropertyRef):
        return f"{operand.var}.{operand.key}"
    return _format_literal(operand)


def _format_node(node: NodePattern) -> str:
    label = f":{node.label}" if node.label else ""
    return f"({node.var or ''}{label})"


def _format_edge(edge: EdgePattern) -> str:
    label = f":{edge.label}" if edge.label else ""
    return f"-[{edge.var or ''}{label}]->"


def _format_path(path: PathPattern) -> str:
    parts = [_format_node(path.nodes[0])]
    for edge, node in zip(path.edges, path.nodes[1:]):
        parts.append(_format_edge(edge))
        parts.append(_format_node(node))
    return "".join(parts)


def pretty_print(query: PatternQuery) -> str:
    """Render the canonical single-spaced text of a query."""
    parts = ["MATCH ", ", ".join(_format_path(p) for p in query.paths)]
    if query.filters:
        parts.append(" WHERE ")
        parts.append(
            " AND ".join(
                f"{_format_operand(c.lhs)} {c.op} {_format_operand(c.rhs)}"
                for c in query.filters
            )
        )
    parts.append(" RETURN ")
    parts.append("*" if query.returns is None else ", ".join(query.returns))
    return "".join(parts)
