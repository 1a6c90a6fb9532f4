"""Compilation of a pattern query against a graph into flat integer arrays.

The structural part of matching (walking label-constrained paths while
keeping edge bindings distinct) is the hot loop, so it runs over a dense
integer encoding that both the pure-Python kernel and the compiled kernel
understand:

- nodes and edges get dense indexes in ascending-id order;
- each distinct node label used by the query gets a candidate list and a
  membership byte-array;
- pattern slots become a step list: BIND a path's first node, then EXPAND
  one edge at a time left-to-right.

Anonymous patterns get their own variable slots (after the named ones), so
the kernels treat named and anonymous slots uniformly: node variables may
map to the same node, edge variables must map to pairwise distinct edges,
and reusing a name means reusing the element.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from ..graph import PropertyGraph
from .ast import PatternQuery

STEP_BIND = 0
STEP_EXPAND = 1

EDGE_LABEL_ANY = -2
EDGE_LABEL_MISSING = -1


@dataclass
class GraphIndex:
    """Dense integer view of a graph for the matching kernels."""

    node_ids: list[int]
    edge_ids: list[int]
    esrc: array  # dense src node index per edge
    edst: array
    elab: array  # interned edge label per edge
    out_start: array  # CSR adjacency over dense node index
    out_edges: array
    edge_label_ids: dict[str, int]
    node_index: dict[int, int]


def build_graph_index(graph: PropertyGraph) -> GraphIndex:
    node_ids = [node.id for node in graph.nodes()]
    node_index = {node_id: i for i, node_id in enumerate(node_ids)}
    edge_label_ids: dict[str, int] = {}
    edge_ids, esrc, edst, elab = [], array("q"), array("q"), array("q")
    edge_index: dict[int, int] = {}
    for edge in graph.edges():
        edge_index[edge.id] = len(edge_ids)
        edge_ids.append(edge.id)
        esrc.append(node_index[edge.src])
        edst.append(node_index[edge.dst])
        elab.append(edge_label_ids.setdefault(edge.label, len(edge_label_ids)))
    out_start = array("q", [0])
    out_edges = array("q")
    for node_id in node_ids:
        for edge in graph.out_edges(node_id):
            out_edges.append(edge_index[edge.id])
        out_start.append(len(out_edges))
    return GraphIndex(node_ids, edge_ids, esrc, edst, elab, out_start, out_edges,
                      edge_label_ids, node_index)


@dataclass
class CompiledQuery:
    """Step program plus variable bookkeeping for one query on one graph."""

    node_var_names: list[str | None]  # index -> name (None for anonymous slots)
    edge_var_names: list[str | None]
    named_nodes: dict[str, int]
    named_edges: dict[str, int]
    step_kind: array
    s_a: array
    s_b: array
    s_c: array
    s_d: array
    s_e: array
    # node-label tables, keyed by the order labels first appear in the query
    cand_start: array
    cand_flat: array
    has_label: array  # n_label_keys * n_nodes membership bytes


def compile_query(query: PatternQuery, index: GraphIndex, graph: PropertyGraph) -> CompiledQuery:
    declared = query.variables()
    named_nodes = {name: i for i, name in
                   enumerate(n for n, k in declared.items() if k == "node")}
    named_edges = {name: i for i, name in
                   enumerate(n for n, k in declared.items() if k == "edge")}
    node_var_names: list[str | None] = [None] * len(named_nodes)
    edge_var_names: list[str | None] = [None] * len(named_edges)
    for name, i in named_nodes.items():
        node_var_names[i] = name
    for name, i in named_edges.items():
        edge_var_names[i] = name

    label_keys: dict[str, int] = {}

    def node_label_key(label: str | None) -> int:
        if label is None:
            return -1
        return label_keys.setdefault(label, len(label_keys))

    def node_slot(var: str | None) -> int:
        if var is not None:
            return named_nodes[var]
        node_var_names.append(None)
        return len(node_var_names) - 1

    def edge_slot(var: str | None) -> int:
        if var is not None:
            return named_edges[var]
        edge_var_names.append(None)
        return len(edge_var_names) - 1

    step_kind, s_a, s_b, s_c, s_d, s_e = (array("q") for _ in range(6))
    for path in query.paths:
        first = path.nodes[0]
        src_var = node_slot(first.var)
        step_kind.append(STEP_BIND)
        s_a.append(src_var)
        s_b.append(node_label_key(first.label))
        s_c.append(-1); s_d.append(-1); s_e.append(-1)
        for edge, node in zip(path.edges, path.nodes[1:]):
            dst_var = node_slot(node.var)
            if edge.label is None:
                label_id = EDGE_LABEL_ANY
            else:
                label_id = index.edge_label_ids.get(edge.label, EDGE_LABEL_MISSING)
            step_kind.append(STEP_EXPAND)
            s_a.append(edge_slot(edge.var))
            s_b.append(label_id)
            s_c.append(src_var)
            s_d.append(dst_var)
            s_e.append(node_label_key(node.label))
            src_var = dst_var

    n_nodes = len(index.node_ids)
    has_label = array("b", bytes(len(label_keys) * n_nodes))
    cand_start = array("q", [0])
    cand_flat = array("q")
    for label, key in label_keys.items():
        for node_id in graph.nodes_with_label(label):
            dense = index.node_index[node_id]
            cand_flat.append(dense)
            has_label[key * n_nodes + dense] = 1
        cand_start.append(len(cand_flat))

    return CompiledQuery(node_var_names, edge_var_names, named_nodes, named_edges,
                         step_kind, s_a, s_b, s_c, s_d, s_e,
                         cand_start, cand_flat, has_label)
