from __future__ import annotations
import logging
from collections import deque
from typing import Iterable

from utils import GraphParseError, GraphValidationError

logger = logging.getLogger(__name__)


def edge_key(u: str, v: str) -> frozenset:
    """direction insensitive key of the edge uv"""
    return frozenset((u, v))


class Graph:
    """
    labeled simple undirected graph
    vertices keep their insertion order so every traversal is deterministic,
    instances are not modified after construction
    """

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()) -> None:
        """
        build a graph, validating every edge

        args:
            vertices: vertex labels in the wanted order, endpoints of edges are appended if missing
            edges: pairs of labels

        raises:
            GraphValidationError on a self loop or a duplicate edge
        """
        self._adjacency: dict[str, dict[str, None]] = {}
        self._edges: list[tuple[str, str]] = []
        for v in vertices:
            self._adjacency.setdefault(v, {})
        for u, v in edges:
            self._add_edge(u, v)

    def _add_edge(self, u: str, v: str) -> None:
        if u == v:
            raise GraphValidationError(f"self-loop on vertex {u}", (u, v))
        if v in self._adjacency.get(u, ()):
            raise GraphValidationError(f"duplicate edge {u} {v}", (u, v))
        self._adjacency.setdefault(u, {})[v] = None
        self._adjacency.setdefault(v, {})[u] = None
        self._edges.append((u, v))

    @property
    def vertices(self) -> list[str]:
        return list(self._adjacency)

    @property
    def edges(self) -> list[tuple[str, str]]:
        """edges in insertion order, each pair as it was given"""
        return list(self._edges)

    def edge_set(self) -> set[frozenset]:
        return {edge_key(u, v) for u, v in self._edges}

    def neighbors(self, v: str) -> list[str]:
        return list(self._adjacency[v])

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adjacency.get(u, ())

    def degree(self, v: str) -> int:
        return len(self._adjacency[v])

    def __contains__(self, v: str) -> bool:
        return v in self._adjacency

    def __len__(self) -> int:
        return len(self._adjacency)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self._adjacency) == set(other._adjacency) and self.edge_set() == other.edge_set()

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self.edge_count})"

    def subgraph(self, vertices: Iterable[str]) -> Graph:
        """induced subgraph, keeping the vertex order of this graph"""
        keep = set(vertices)
        order = [v for v in self._adjacency if v in keep]
        return Graph(order, [(u, v) for u, v in self._edges if u in keep and v in keep])

    def without_vertex(self, vertex: str) -> Graph:
        return self.subgraph(v for v in self._adjacency if v != vertex)

    def connected_components(self) -> list[list[str]]:
        """components as vertex lists, ordered by their first vertex in input order"""
        seen: set[str] = set()
        components = []
        for start in self._adjacency:
            if start in seen:
                continue
            seen.add(start)
            component = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self._adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        component.append(w)
                        queue.append(w)
            components.append(component)
        return components

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def to_edge_list(self) -> str:
        """serialise in the edge-list format, isolated vertices are written as a comment-free single token line"""
        lines = [f"{u} {v}" for u, v in self._edges]
        lines += [v for v in self._adjacency if not self._adjacency[v]]
        return "\n".join(lines) + ("\n" if lines else "")


def parse_graph(text: str) -> Graph:
    """
    parse an edge-list document

    one edge per line as two whitespace separated tokens, '#' starts a comment line,
    blank lines are skipped. a line with a single token declares an isolated vertex
    (written that way by Graph.to_edge_list)

    raises:
        GraphParseError with the line number on a malformed line
        GraphValidationError naming the edge on a self loop or duplicate
    """
    vertices: dict[str, None] = {}
    edges: list[tuple[str, str]] = []
    seen: set[frozenset] = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            vertices.setdefault(tokens[0], None)
            continue
        if len(tokens) != 2:
            raise GraphParseError(number, f"expected two vertex tokens, got {len(tokens)}")
        u, v = tokens
        if u == v:
            raise GraphValidationError(f"line {number}: self-loop on vertex {u}", (u, v))
        key = edge_key(u, v)
        if key in seen:
            raise GraphValidationError(f"line {number}: duplicate edge {u} {v}", (u, v))
        seen.add(key)
        vertices.setdefault(u, None)
        vertices.setdefault(v, None)
        edges.append((u, v))
    graph = Graph(vertices, edges)
    logger.debug("parsed graph with %d vertices and %d edges", len(graph), graph.edge_count)
    return graph


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle.read())
