"""Independent oracles the test suite checks the engine against.

Nothing here imports the engine's planner, kernels or comparison helpers:
the matcher oracle enumerates raw assignments straight off the AST, and the
scoring oracle recomputes reports from plain dicts. Keeping these separate
is the whole point - they must be able to disagree with the implementation.
"""

from __future__ import annotations

import itertools

from iaselect.graph import PropertyGraph
from iaselect.query.ast import Literal, PatternQuery, PropertyRef


def _entities(query: PatternQuery):
    """Assign one entity index per distinct variable / anonymous occurrence.

    Returns (n_node_entities, n_edge_entities, paths, named_nodes,
    named_edges) where paths lists, per path, the node occurrence list
    [(entity, label)] and edge occurrence list [(entity, label)].
    """
    named_nodes: dict[str, int] = {}
    named_edges: dict[str, int] = {}
    node_count = 0
    edge_count = 0
    paths = []
    for path in query.paths:
        node_occ = []
        for pattern in path.nodes:
            if pattern.var is None:
                entity = node_count
                node_count += 1
            elif pattern.var in named_nodes:
                entity = named_nodes[pattern.var]
            else:
                entity = named_nodes[pattern.var] = node_count
                node_count += 1
            node_occ.append((entity, pattern.label))
        edge_occ = []
        for pattern in path.edges:
            if pattern.var is None:
                entity = edge_count
                edge_count += 1
            elif pattern.var in named_edges:
                entity = named_edges[pattern.var]
            else:
                entity = named_edges[pattern.var] = edge_count
                edge_count += 1
            edge_occ.append((entity, pattern.label))
        paths.append((node_occ, edge_occ))
    return node_count, edge_count, paths, named_nodes, named_edges


def _compare(lhs, op, rhs) -> bool:
    # plain reimplementation of the filter comparison semantics
    if lhs is None or rhs is None:
        return False

    def family(v):
        if isinstance(v, bool):
            return "bool"
        if isinstance(v, (int, float)):
            return "number"
        return "text"

    if family(lhs) != family(rhs):
        return False
    return {
        "=": lambda a, b: a == b,
        "<>": lambda a, b: a != b,
        "<": lambda a, b: a < b,
        "<=": lambda a, b: a <= b,
        ">": lambda a, b: a > b,
        ">=": lambda a, b: a >= b,
    }[op](lhs, rhs)


def oracle_evaluate(query: PatternQuery, graph: PropertyGraph):
    """Row set by brute-force enumeration over all node/edge assignments.

    Returns (columns, sorted rows of element-id tuples).
    """
    n_node_entities, n_edge_entities, paths, named_nodes, named_edges = _entities(query)
    nodes = list(graph.nodes())
    edges = list(graph.edges())

    # node entities whose image is forced by some edge occurrence
    bound_by_edge = set()
    for node_occ, edge_occ in paths:
        for i in range(len(edge_occ)):
            bound_by_edge.add(node_occ[i][0])
            bound_by_edge.add(node_occ[i + 1][0])
    free_nodes = [e for e in range(n_node_entities) if e not in bound_by_edge]

    accepted: list[tuple[int, ...]] = []
    for edge_choice in itertools.product(edges, repeat=n_edge_entities):
        if len({e.id for e in edge_choice}) != n_edge_entities:
            continue  # edge entities must be pairwise distinct
        node_image: dict[int, int] = {}
        ok = True
        for node_occ, edge_occ in paths:
            for i, (edge_entity, _label) in enumerate(edge_occ):
                edge = edge_choice[edge_entity]
                for entity, endpoint in ((node_occ[i][0], edge.src), (node_occ[i + 1][0], edge.dst)):
                    if node_image.setdefault(entity, endpoint) != endpoint:
                        ok = False
            if not ok:
                break
        if not ok:
            continue
        for free_choice in itertools.product(nodes, repeat=len(free_nodes)):
            assignment = dict(node_image)
            for entity, node in zip(free_nodes, free_choice):
                assignment[entity] = node.id
            if _check(query, graph, paths, assignment, edge_choice, named_nodes, named_edges):
                accepted.append(_project(query, assignment, edge_choice, named_nodes, named_edges))

    columns = _columns(query)
    return columns, sorted(set(accepted))


def _check(query, graph, paths, node_image, edge_choice, named_nodes, named_edges) -> bool:
    for node_occ, edge_occ in paths:
        for entity, label in node_occ:
            if label is not None and label not in graph.node(node_image[entity]).labels:
                return False
        for entity, label in edge_occ:
            if label is not None and edge_choice[entity].label != label:
                return False
    for comp in query.filters:
        values = []
        for operand in (comp.lhs, comp.rhs):
            if isinstance(operand, Literal):
                values.append(operand.value)
            elif operand.var in named_nodes:
                values.append(graph.node(node_image[named_nodes[operand.var]]).attrs.get(operand.key))
            else:
                values.append(edge_choice[named_edges[operand.var]].attrs.get(operand.key))
        if not _compare(values[0], comp.op, values[1]):
            return False
    return True


def _columns(query: PatternQuery) -> list[str]:
    if query.returns is not None:
        return list(query.returns)
    seen = []
    for path in query.paths:
        for i, node in enumerate(path.nodes):
            if node.var is not None and node.var not in seen:
                seen.append(node.var)
            if i < len(path.edges) and path.edges[i].var is not None and path.edges[i].var not in seen:
                seen.append(path.edges[i].var)
    return seen


def _project(query, node_image, edge_choice, named_nodes, named_edges) -> tuple[int, ...]:
    ids = []
    for name in _columns(query):
        if name in named_nodes:
            ids.append(node_image[named_nodes[name]])
        else:
            ids.append(edge_choice[named_edges[name]].id)
    return tuple(ids)


def result_id_rows(result) -> list[tuple[int, ...]]:
    """Collapse an engine ResultSet to the oracle's id-tuple representation."""
    return [tuple(row[var].id for var in result.columns) for row in result.rows]


# -- schema validation recheck -------------------------------------------------


def naive_validate(graph: PropertyGraph, schema) -> set[tuple]:
    """Re-derive the violation set with independent loops.

    Returns {(kind, id, rule)} triples for comparison; messages are left to
    the engine.
    """
    out = set()
    for node in graph.nodes():
        for label in node.labels:
            if label not in schema.node_labels:
                out.add(("node", node.id, "undeclared-label"))
        for label in node.labels:
            for key, rule in schema.node_attr_rules.get(label, {}).items():
                if key not in node.attrs:
                    out.add(("node", node.id, "attr-missing"))
                elif _breaks_rule(rule, node.attrs[key]):
                    out.add(("node", node.id, "attr-invalid"))
    for edge in graph.edges():
        candidates = [
            rule for rule in schema.edge_rules
            if rule.edge_label == edge.label
            and rule.src_label in graph.node(edge.src).labels
            and rule.dst_label in graph.node(edge.dst).labels
        ]
        if not candidates:
            out.add(("edge", edge.id, "no-edge-rule"))
            continue
        if any(_rule_accepts(rule, edge.attrs) for rule in candidates):
            continue
        rule = candidates[0]
        for key, attr_rule in rule.required_attrs.items():
            if key not in edge.attrs:
                out.add(("edge", edge.id, "attr-missing"))
            elif _breaks_rule(attr_rule, edge.attrs[key]):
                out.add(("edge", edge.id, "attr-invalid"))
    return out


def _breaks_rule(rule, value) -> bool:
    kinds = {bool: "bool", str: "text", float: "float", int: "int"}
    kind = "bool" if isinstance(value, bool) else kinds[type(value)]
    if kind != rule.kind and not (rule.kind == "float" and kind == "int"):
        return True
    if rule.kind in ("float", "int"):
        if rule.min_value is not None and value < rule.min_value:
            return True
        if rule.max_value is not None and value > rule.max_value:
            return True
    return False


def _rule_accepts(rule, attrs) -> bool:
    return all(
        key in attrs and not _breaks_rule(attr_rule, attrs[key])
        for key, attr_rule in rule.required_attrs.items()
    )
