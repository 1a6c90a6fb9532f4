"""In-memory property graph: attributed labeled nodes, directed attributed edges.

The graph is a multigraph: any number of parallel edges may connect the same
pair of nodes, even with identical labels; each keeps its own identity and
attributes. Ids are engine-assigned monotonically increasing integers drawn
from a single counter shared by nodes and edges, so an id alone identifies
an element of either kind.

All iteration orders are deterministic (ascending id), which keeps
validation output, query results and reports reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .values import AttrValue, check_attrs


class GraphError(Exception):
    """Base class for graph mutation errors."""


class EmptyLabels(GraphError):
    """A node was created with an empty label set."""


class UnknownEndpoint(GraphError):
    """An edge references a node id that is not in the graph."""


class UnknownElement(GraphError):
    """An element id does not name a node or edge of the graph."""


@dataclass
class Node:
    id: int
    labels: frozenset[str]
    attrs: dict[str, AttrValue]


@dataclass
class Edge:
    id: int
    src: int
    dst: int
    label: str
    attrs: dict[str, AttrValue]


def _check_labels(labels: Iterable[str]) -> frozenset[str]:
    label_set = frozenset(labels)
    if not label_set:
        raise EmptyLabels("a node must carry at least one label")
    for label in label_set:
        if not isinstance(label, str) or not label:
            raise EmptyLabels(f"labels must be non-empty strings, got {label!r}")
    return label_set


class PropertyGraph:
    def __init__(self) -> None:
        self._nodes: dict[int, Node] = {}
        self._edges: dict[int, Edge] = {}
        self._label_index: dict[str, set[int]] = {}
        self._out: dict[int, list[int]] = {}
        self._in: dict[int, list[int]] = {}
        self._next_id = 1

    def __repr__(self) -> str:
        return f"PropertyGraph(nodes={len(self._nodes)}, edges={len(self._edges)})"

    # -- mutations ---------------------------------------------------------

    def add_node(self, labels: Iterable[str], attrs: dict | None = None) -> int:
        label_set = _check_labels(labels)
        checked = check_attrs(attrs or {})
        node_id = self._next_id
        self._next_id += 1
        self._nodes[node_id] = Node(node_id, label_set, checked)
        self._out[node_id] = []
        self._in[node_id] = []
        for label in label_set:
            self._label_index.setdefault(label, set()).add(node_id)
        return node_id

    def add_edge(self, src: int, dst: int, label: str, attrs: dict | None = None) -> int:
        if src not in self._nodes:
            raise UnknownEndpoint(f"unknown source node {src}")
        if dst not in self._nodes:
            raise UnknownEndpoint(f"unknown destination node {dst}")
        if not isinstance(label, str) or not label:
            raise GraphError(f"edge labels must be non-empty strings, got {label!r}")
        checked = check_attrs(attrs or {})
        edge_id = self._next_id
        self._next_id += 1
        self._edges[edge_id] = Edge(edge_id, src, dst, label, checked)
        self._out[src].append(edge_id)
        self._in[dst].append(edge_id)
        return edge_id

    def update_attrs(self, element_id: int, attrs: dict) -> dict[str, AttrValue]:
        """Overwrite/add the given keys on a node or edge.

        Returns a copy of the element's attribute map as it was before the
        update. Keys not mentioned are untouched; an empty map is a no-op.
        """
        element = self._nodes.get(element_id) or self._edges.get(element_id)
        if element is None:
            raise UnknownElement(f"no element with id {element_id}")
        checked = check_attrs(attrs)
        previous = dict(element.attrs)
        element.attrs.update(checked)
        return previous

    def remove(self, element_id: int) -> int:
        """Remove a node (with all incident edges) or a single edge.

        Returns the number of elements removed.
        """
        if element_id in self._edges:
            self._detach_edge(element_id)
            return 1
        node = self._nodes.get(element_id)
        if node is None:
            raise UnknownElement(f"no element with id {element_id}")
        incident = list(dict.fromkeys(self._out[element_id] + self._in[element_id]))
        for edge_id in incident:
            self._detach_edge(edge_id)
        for label in node.labels:
            ids = self._label_index[label]
            ids.discard(element_id)
            if not ids:
                del self._label_index[label]
        del self._nodes[element_id]
        del self._out[element_id]
        del self._in[element_id]
        return 1 + len(incident)

    def _detach_edge(self, edge_id: int) -> None:
        edge = self._edges.pop(edge_id)
        self._out[edge.src].remove(edge_id)
        self._in[edge.dst].remove(edge_id)

    # -- reads -------------------------------------------------------------

    def node(self, node_id: int) -> Node:
        try:
            return self._nodes[node_id]
        except KeyError:
            raise UnknownElement(f"no node with id {node_id}") from None

    def edge(self, edge_id: int) -> Edge:
        try:
            return self._edges[edge_id]
        except KeyError:
            raise UnknownElement(f"no edge with id {edge_id}") from None

    def has_node(self, node_id: int) -> bool:
        return node_id in self._nodes

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._edges

    def nodes(self) -> Iterator[Node]:
        """All nodes in ascending id order."""
        for node_id in sorted(self._nodes):
            yield self._nodes[node_id]

    def edges(self) -> Iterator[Edge]:
        """All edges in ascending id order."""
        for edge_id in sorted(self._edges):
            yield self._edges[edge_id]

    def node_count(self) -> int:
        return len(self._nodes)

    def edge_count(self) -> int:
        return len(self._edges)

    def nodes_with_label(self, label: str) -> list[int]:
        """Node ids carrying the label, ascending."""
        return sorted(self._label_index.get(label, ()))

    def out_edges(self, node_id: int) -> list[Edge]:
        """Outgoing edges of a node in insertion order."""
        return [self._edges[e] for e in self._out.get(node_id, ())]

    def in_edges(self, node_id: int) -> list[Edge]:
        return [self._edges[e] for e in self._in.get(node_id, ())]

    def edges_between(self, src: int, dst: int) -> list[Edge]:
        """All parallel edges src -> dst in insertion order."""
        return [self._edges[e] for e in self._out.get(src, ()) if self._edges[e].dst == dst]

    # -- structural equality and restore (persistence support) --------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, PropertyGraph):
            return NotImplemented
        return self._nodes == other._nodes and self._edges == other._edges

    def _restore_node(self, node_id: int, labels: Iterable[str], attrs: dict) -> None:
        """Insert a node under a caller-supplied id. Used by document loading."""
        if node_id in self._nodes or node_id in self._edges:
            raise GraphError(f"duplicate element id {node_id}")
        label_set = _check_labels(labels)
        self._nodes[node_id] = Node(node_id, label_set, check_attrs(attrs))
        self._out[node_id] = []
        self._in[node_id] = []
        for label in label_set:
            self._label_index.setdefault(label, set()).add(node_id)
        self._next_id = max(self._next_id, node_id + 1)

    def _restore_edge(self, edge_id: int, src: int, dst: int, label: str, attrs: dict) -> None:
        if edge_id in self._nodes or edge_id in self._edges:
            raise GraphError(f"duplicate element id {edge_id}")
        if src not in self._nodes or dst not in self._nodes:
            raise UnknownEndpoint(f"edge {edge_id} references a missing node")
        if not isinstance(label, str) or not label:
            raise GraphError(f"edge labels must be non-empty strings, got {label!r}")
        self._edges[edge_id] = Edge(edge_id, src, dst, label, check_attrs(attrs))
        self._out[src].append(edge_id)
        self._in[dst].append(edge_id)
        self._next_id = max(self._next_id, edge_id + 1)
