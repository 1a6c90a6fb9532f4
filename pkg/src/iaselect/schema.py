"""Graph schemas: declared node labels, edge-type rules, attribute constraints.

A schema never blocks mutations by itself; ``validate`` reports violations as
data and callers (the store's strict mode, the importer) decide what to do
with them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Edge, Node, PropertyGraph
from .values import ATTR_KINDS, KIND_FLOAT, KIND_INT, KIND_TEXT, kind_of

# Node labels of the shipped practice-selection schema.
PRACTICE = "Practice"
ON_DEVICE = "OnDevice"
HYBRID = "Hybrid"
DOMAIN = "Domain"
FUNCTION = "Function"
MAINTENANCE = "Maintenance"
PERFORMANCE_EFFICIENCY = "PerformanceEfficiency"

LOCATION_LABELS = (ON_DEVICE, HYBRID)
CHARACTERISTIC_LABELS = (DOMAIN, FUNCTION, MAINTENANCE, PERFORMANCE_EFFICIENCY)

WEIGHT = "WEIGHT"

# Canonical characteristic vocabulary of the practice data set.
DOMAIN_NAMES = ("Factory Automation", "Building Automation", "Energy")
FUNCTION_NAMES = ("Monitoring", "Control", "Simulation")
MAINTENANCE_NAMES = ("Re-usability", "Capacity To Host agents")
PERFORMANCE_EFFICIENCY_NAMES = ("Time behaviour", "Scalability")

HOST_AGENTS = "Capacity To Host agents"

WEIGHT_MIN = 0.0
WEIGHT_MAX = 5.0


class SchemaError(ValueError):
    """A schema definition is internally inconsistent."""


@dataclass(frozen=True)
class AttrRule:
    """Required kind, and optional numeric range, for one attribute key."""

    kind: str
    min_value: float | None = None
    max_value: float | None = None

    def __post_init__(self):
        if self.kind not in ATTR_KINDS:
            raise SchemaError(f"unknown attribute kind {self.kind!r}")
        if self.min_value is not None and self.max_value is not None:
            if self.min_value > self.max_value:
                raise SchemaError("attribute rule has min > max")

    def check(self, value) -> str | None:
        """Return a violation message for the value, or None if it conforms."""
        kind = kind_of(value)
        if kind != self.kind and not (self.kind == KIND_FLOAT and kind == KIND_INT):
            return f"expected {self.kind}, got {kind}"
        if self.kind in (KIND_FLOAT, KIND_INT):
            if self.min_value is not None and value < self.min_value:
                return f"value {value!r} below minimum {self.min_value}"
            if self.max_value is not None and value > self.max_value:
                return f"value {value!r} above maximum {self.max_value}"
        return None


@dataclass(frozen=True)
class EdgeTypeRule:
    src_label: str
    edge_label: str
    dst_label: str
    required_attrs: dict = field(default_factory=dict)

    def label_match(self, graph: PropertyGraph, edge: Edge) -> bool:
        return (
            edge.label == self.edge_label
            and self.src_label in graph.node(edge.src).labels
            and self.dst_label in graph.node(edge.dst).labels
        )


@dataclass
class GraphSchema:
    node_labels: set[str]
    edge_rules: list[EdgeTypeRule]
    node_attr_rules: dict[str, dict[str, AttrRule]] = field(default_factory=dict)

    def __post_init__(self):
        for rule in self.edge_rules:
            for label in (rule.src_label, rule.dst_label):
                if label not in self.node_labels:
                    raise SchemaError(
                        f"edge rule {rule.src_label}-{rule.edge_label}->{rule.dst_label} "
                        f"references undeclared label {label!r}"
                    )
        for label in self.node_attr_rules:
            if label not in self.node_labels:
                raise SchemaError(f"attribute rules reference undeclared label {label!r}")


@dataclass(frozen=True)
class Violation:
    element_kind: str  # "node" | "edge"
    element_id: int
    rule: str
    message: str


def default_schema() -> GraphSchema:
    """The shipped practice-selection schema.

    Practices carry name/coupling/apiClient/channel text attributes plus one
    of the location labels; each characteristic node carries a name; WEIGHT
    edges run from a practice to a characteristic and hold a float value in
    [0, 5].
    """
    weight_attr = {"value": AttrRule(KIND_FLOAT, WEIGHT_MIN, WEIGHT_MAX)}
    text = AttrRule(KIND_TEXT)
    return GraphSchema(
        node_labels={PRACTICE, *LOCATION_LABELS, *CHARACTERISTIC_LABELS},
        edge_rules=[
            EdgeTypeRule(PRACTICE, WEIGHT, label, weight_attr)
            for label in CHARACTERISTIC_LABELS
        ],
        node_attr_rules={
            PRACTICE: {
                "name": text,
                "coupling": text,
                "apiClient": text,
                "channel": text,
            },
            **{label: {"name": text} for label in CHARACTERISTIC_LABELS},
        },
    )


def _check_node(node: Node, schema: GraphSchema, out: list[Violation]) -> None:
    for label in sorted(node.labels):
        if label not in schema.node_labels:
            out.append(
                Violation("node", node.id, "undeclared-label", f"label {label!r} is not declared")
            )
    for label in sorted(node.labels):
        for key, rule in schema.node_attr_rules.get(label, {}).items():
            if key not in node.attrs:
                out.append(
                    Violation(
                        "node", node.id, "attr-missing",
                        f"label {label!r} requires attribute {key!r}",
                    )
                )
                continue
            problem = rule.check(node.attrs[key])
            if problem:
                out.append(Violation("node", node.id, "attr-invalid", f"{key!r}: {problem}"))


def _check_edge(graph: PropertyGraph, edge: Edge, schema: GraphSchema, out: list[Violation]) -> None:
    matching = [r for r in schema.edge_rules if r.label_match(graph, edge)]
    if not matching:
        src = "/".join(sorted(graph.node(edge.src).labels))
        dst = "/".join(sorted(graph.node(edge.dst).labels))
        out.append(
            Violation(
                "edge", edge.id, "no-edge-rule",
                f"no rule allows ({src})-[{edge.label}]->({dst})",
            )
        )
        return
    for rule in matching:
        problems = []
        for key, attr_rule in rule.required_attrs.items():
            if key not in edge.attrs:
                problems.append(("attr-missing", f"rule requires attribute {key!r}"))
                continue
            problem = attr_rule.check(edge.attrs[key])
            if problem:
                problems.append(("attr-invalid", f"{key!r}: {problem}"))
        if not problems:
            return  # some rule fully accepts the edge
    # report against the first label-matching rule for determinism
    rule = matching[0]
    for key, attr_rule in rule.required_attrs.items():
        if key not in edge.attrs:
            out.append(Violation("edge", edge.id, "attr-missing", f"rule requires attribute {key!r}"))
            continue
        problem = attr_rule.check(edge.attrs[key])
        if problem:
            out.append(Violation("edge", edge.id, "attr-invalid", f"{key!r}: {problem}"))


def validate(graph: PropertyGraph, schema: GraphSchema) -> list[Violation]:
    """Check every node and edge against the schema.

    Returns all violations in ascending element-id order; an empty list means
    the graph conforms.
    """
    violations: list[Violation] = []
    elements: list[tuple[int, str]] = [(n.id, "node") for n in graph.nodes()]
    elements += [(e.id, "edge") for e in graph.edges()]
    for element_id, kind in sorted(elements):
        if kind == "node":
            _check_node(graph.node(element_id), schema, violations)
        else:
            _check_edge(graph, graph.edge(element_id), schema, violations)
    return violations
