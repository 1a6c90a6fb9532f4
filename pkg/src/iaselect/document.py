"""Graph document persistence.

A graph and its schema serialize together into a single UTF-8 JSON document:

    {
      "version": 1,
      "schema": {"node_labels": [...], "edge_rules": [...], "node_attr_rules": {...}},
      "nodes": [{"id": "1", "labels": [...], "attrs": {...}}, ...],
      "edges": [{"id": "7", "src": "1", "dst": "2", "label": "WEIGHT", "attrs": {...}}, ...]
    }

Ids are integers serialized as text. Attribute values are typed by their
JSON type; floats always carry a decimal point (or exponent), so ints and
floats survive a round-trip unchanged. ``load(save(g, s))`` reproduces the
graph structurally, ids included.
"""

from __future__ import annotations

import json
from typing import Any

from .graph import GraphError, PropertyGraph, UnknownEndpoint
from .schema import AttrRule, EdgeTypeRule, GraphSchema, SchemaError
from .values import InvalidAttrKey, InvalidAttrValue, check_attrs

DOCUMENT_VERSION = 1


class MalformedDocument(ValueError):
    def __init__(self, message: str, *, line: int | None = None,
                 column: int | None = None, where: str | None = None):
        self.line = line
        self.column = column
        self.where = where
        prefix = ""
        if line is not None:
            prefix = f"line {line}, column {column}: "
        elif where is not None:
            prefix = f"at {where}: "
        super().__init__(prefix + message)
        self.message = message


def _attr_rule_obj(rule: AttrRule) -> dict:
    obj: dict[str, Any] = {"kind": rule.kind}
    if rule.min_value is not None:
        obj["min"] = rule.min_value
    if rule.max_value is not None:
        obj["max"] = rule.max_value
    return obj


def schema_to_obj(schema: GraphSchema) -> dict:
    return {
        "node_labels": sorted(schema.node_labels),
        "edge_rules": [
            {
                "src_label": rule.src_label,
                "edge_label": rule.edge_label,
                "dst_label": rule.dst_label,
                "required_attrs": {
                    key: _attr_rule_obj(attr) for key, attr in sorted(rule.required_attrs.items())
                },
            }
            for rule in schema.edge_rules
        ],
        "node_attr_rules": {
            label: {key: _attr_rule_obj(attr) for key, attr in sorted(rules.items())}
            for label, rules in sorted(schema.node_attr_rules.items())
        },
    }


def save(graph: PropertyGraph, schema: GraphSchema) -> bytes:
    document = {
        "version": DOCUMENT_VERSION,
        "schema": schema_to_obj(schema),
        "nodes": [
            {"id": str(node.id), "labels": sorted(node.labels), "attrs": node.attrs}
            for node in graph.nodes()
        ],
        "edges": [
            {
                "id": str(edge.id),
                "src": str(edge.src),
                "dst": str(edge.dst),
                "label": edge.label,
                "attrs": edge.attrs,
            }
            for edge in graph.edges()
        ],
    }
    return json.dumps(document, indent=2, ensure_ascii=False).encode("utf-8")


def _require(obj: dict, key: str, expected: type, where: str):
    if not isinstance(obj, dict):
        raise MalformedDocument(f"expected an object, got {type(obj).__name__}", where=where)
    if key not in obj:
        raise MalformedDocument(f"missing key {key!r}", where=where)
    value = obj[key]
    if expected is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise MalformedDocument(f"key {key!r} must be a number", where=where)
        return value
    if not isinstance(value, expected) or (expected is not bool and isinstance(value, bool)):
        raise MalformedDocument(
            f"key {key!r} must be {expected.__name__}, got {type(value).__name__}", where=where
        )
    return value


def _parse_id(text: Any, where: str) -> int:
    if not isinstance(text, str):
        raise MalformedDocument("ids must be strings of digits", where=where)
    try:
        value = int(text, 10)
    except ValueError:
        raise MalformedDocument(f"invalid id {text!r}", where=where) from None
    if value < 1 or str(value) != text:
        raise MalformedDocument(f"invalid id {text!r}", where=where)
    return value


def _parse_attrs(obj: Any, where: str) -> dict:
    if not isinstance(obj, dict):
        raise MalformedDocument("attrs must be an object", where=where)
    try:
        return check_attrs(obj)
    except (InvalidAttrKey, InvalidAttrValue) as exc:
        raise MalformedDocument(str(exc), where=where) from None


def _parse_attr_rule(obj: Any, where: str) -> AttrRule:
    kind = _require(obj, "kind", str, where)
    min_value = obj.get("min")
    max_value = obj.get("max")
    for bound, name in ((min_value, "min"), (max_value, "max")):
        if bound is not None and (isinstance(bound, bool) or not isinstance(bound, (int, float))):
            raise MalformedDocument(f"key {name!r} must be a number", where=where)
    try:
        return AttrRule(
            kind,
            None if min_value is None else float(min_value),
            None if max_value is None else float(max_value),
        )
    except SchemaError as exc:
        raise MalformedDocument(str(exc), where=where) from None


def _parse_schema(obj: Any) -> GraphSchema:
    where = "schema"
    labels = _require(obj, "node_labels", list, where)
    for label in labels:
        if not isinstance(label, str) or not label:
            raise MalformedDocument("node labels must be non-empty strings", where=where)
    rules_obj = _require(obj, "edge_rules", list, where)
    edge_rules = []
    for i, rule_obj in enumerate(rules_obj):
        rule_where = f"schema.edge_rules[{i}]"
        required = rule_obj.get("required_attrs", {}) if isinstance(rule_obj, dict) else {}
        if not isinstance(required, dict):
            raise MalformedDocument("required_attrs must be an object", where=rule_where)
        edge_rules.append(
            EdgeTypeRule(
                _require(rule_obj, "src_label", str, rule_where),
                _require(rule_obj, "edge_label", str, rule_where),
                _require(rule_obj, "dst_label", str, rule_where),
                {key: _parse_attr_rule(val, rule_where) for key, val in required.items()},
            )
        )
    attr_rules_obj = _require(obj, "node_attr_rules", dict, "schema")
    node_attr_rules = {}
    for label, rules in attr_rules_obj.items():
        rule_where = f"schema.node_attr_rules[{label!r}]"
        if not isinstance(rules, dict):
            raise MalformedDocument("attribute rules must be an object", where=rule_where)
        node_attr_rules[label] = {
            key: _parse_attr_rule(val, rule_where) for key, val in rules.items()
        }
    try:
        return GraphSchema(set(labels), edge_rules, node_attr_rules)
    except SchemaError as exc:
        raise MalformedDocument(str(exc), where="schema") from None


def load(data: bytes) -> tuple[PropertyGraph, GraphSchema]:
    try:
        document = json.loads(data.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise MalformedDocument(f"document is not UTF-8: {exc}") from None
    except json.JSONDecodeError as exc:
        raise MalformedDocument(exc.msg, line=exc.lineno, column=exc.colno) from None

    if not isinstance(document, dict):
        raise MalformedDocument("top level must be an object")
    version = _require(document, "version", int, "document")
    if version != DOCUMENT_VERSION:
        raise MalformedDocument(f"unsupported document version {version!r}")
    schema = _parse_schema(_require(document, "schema", dict, "document"))

    graph = PropertyGraph()
    for i, node_obj in enumerate(_require(document, "nodes", list, "document")):
        where = f"nodes[{i}]"
        node_id = _parse_id(_require(node_obj, "id", str, where), where)
        labels = _require(node_obj, "labels", list, where)
        attrs = _parse_attrs(_require(node_obj, "attrs", dict, where), where)
        try:
            graph._restore_node(node_id, labels, attrs)
        except GraphError as exc:
            raise MalformedDocument(str(exc), where=where) from None
    for i, edge_obj in enumerate(_require(document, "edges", list, "document")):
        where = f"edges[{i}]"
        edge_id = _parse_id(_require(edge_obj, "id", str, where), where)
        src = _parse_id(_require(edge_obj, "src", str, where), where)
        dst = _parse_id(_require(edge_obj, "dst", str, where), where)
        label = _require(edge_obj, "label", str, where)
        attrs = _parse_attrs(_require(edge_obj, "attrs", dict, where), where)
        try:
            graph._restore_edge(edge_id, src, dst, label, attrs)
        except (GraphError, UnknownEndpoint) as exc:
            raise MalformedDocument(str(exc), where=where) from None
    return graph, schema
