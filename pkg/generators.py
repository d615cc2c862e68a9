"""
random instance generators for the supported graph classes and brute-force oracles

every generator grows the graph by attaching a new block at a uniformly chosen
existing vertex, vertex labels are v0, v1, ... in creation order. the same
(n, seed, parameters) always gives the same graph.
"""
from __future__ import annotations
import logging
from itertools import combinations

import numpy as np

from blocks import Classification
from config import DEFAULT_CLIQUE_MAX, DEFAULT_CYCLE_BIAS, DEFAULT_CYCLE_MAX, DEFAULT_CYCLE_MIN
from graph import Graph, edge_key
from path import Representation

logger = logging.getLogger(__name__)


class _Growth:
    """vertex and edge lists of a graph being grown"""

    def __init__(self, n: int, seed: int) -> None:
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        self.n = n
        self.rng = np.random.default_rng(seed)
        self.vertices = ["v0"]
        self.edges: list[tuple[str, str]] = []

    @property
    def remaining(self) -> int:
        return self.n - len(self.vertices)

    def pick(self) -> str:
        return self.vertices[int(self.rng.integers(len(self.vertices)))]

    def new_vertices(self, count: int) -> list[str]:
        start = len(self.vertices)
        created = [f"v{i}" for i in range(start, start + count)]
        self.vertices.extend(created)
        return created

    def cycle(self, anchor: str, length: int) -> None:
        ring = [anchor] + self.new_vertices(length - 1)
        self.edges.extend(zip(ring, ring[1:]))
        self.edges.append((ring[-1], anchor))

    def clique(self, anchor: str, size: int) -> None:
        members = [anchor] + self.new_vertices(size - 1)
        self.edges.extend(combinations(members, 2))

    def graph(self) -> Graph:
        return Graph(self.vertices, self.edges)


def random_tree(n: int, seed: int = 0) -> Graph:
    """random recursive tree, vertex i >= 1 hangs off a uniform earlier vertex"""
    growth = _Growth(n, seed)
    while growth.remaining:
        growth.clique(growth.pick(), 2)
    return growth.graph()


def _cycle_length(growth: _Growth, cycle_min: int, cycle_max: int) -> int | None:
    """
    a random cycle length fitting in the remaining vertices, avoiding a leftover single
    vertex when another length fits; none when no cycle fits
    """
    remaining = growth.remaining
    lengths = list(range(cycle_min, min(cycle_max, remaining + 1) + 1))
    if not lengths:
        return None
    if len(lengths) > 1 and remaining in lengths:
        lengths.remove(remaining)
    return lengths[int(growth.rng.integers(len(lengths)))]


def random_cactus(n: int, seed: int = 0, cycle_bias: float = DEFAULT_CYCLE_BIAS,
                  cycle_max: int = DEFAULT_CYCLE_MAX, cycle_min: int = DEFAULT_CYCLE_MIN) -> Graph:
    """
    attach a pendant edge or, with probability cycle_bias, a cycle of random length
    cycle_min..cycle_max at a random existing vertex until n vertices exist
    """
    growth = _Growth(n, seed)
    while growth.remaining:
        anchor = growth.pick()
        length = _cycle_length(growth, cycle_min, cycle_max) if growth.rng.random() < cycle_bias else None
        if length is None:
            growth.clique(anchor, 2)
        else:
            growth.cycle(anchor, length)
    return growth.graph()


def random_block_graph(n: int, seed: int = 0, clique_max: int = DEFAULT_CLIQUE_MAX) -> Graph:
    """attach cliques of random size 2..clique_max at random existing vertices"""
    if clique_max < 2:
        raise ValueError(f"clique_max must be at least 2, got {clique_max}")
    growth = _Growth(n, seed)
    while growth.remaining:
        size = int(growth.rng.integers(2, min(clique_max, growth.remaining + 1) + 1))
        growth.clique(growth.pick(), size)
    return growth.graph()


def random_composed_graph(n: int, seed: int = 0, universal: bool = True) -> Graph:
    """
    glue edges, triangles and cliques of up to 5 vertices at random vertices, every
    cut vertex is universal in its blocks

    with universal false a diamond (K4 minus an edge) is attached last through one of its
    degree two vertices, which becomes a cut vertex missing a neighbour in that block
    """
    growth = _Growth(n, seed)
    if not universal and n < 5:
        raise ValueError("a violating instance needs at least 5 vertices")
    reserve = 0 if universal else 3
    while growth.remaining > reserve:
        anchor = growth.pick()
        choice = int(growth.rng.integers(3))
        available = growth.remaining - reserve + 1
        if choice == 0 or available < 3:
            growth.clique(anchor, 2)
        elif choice == 1:
            growth.cycle(anchor, 3)
        else:
            growth.clique(anchor, int(growth.rng.integers(3, min(5, available) + 1)))
    if not universal:
        anchor = growth.pick()
        x, y, z = growth.new_vertices(3)
        growth.edges.extend([(anchor, x), (anchor, y), (x, y), (x, z), (y, z)])
    return growth.graph()


def naive_intersection_oracle(r: Representation) -> Graph:
    """pairwise comparison of the explicit edge sets of every two paths"""
    labels = list(r.paths)
    edge_sets = [set(r.paths[v].edges()) for v in labels]
    edges = [(labels[i], labels[j])
             for i, j in combinations(range(len(labels)), 2)
             if edge_sets[i] & edge_sets[j]]
    return Graph(labels, edges)


def brute_force_cut_vertices(g: Graph) -> set[str]:
    """vertices whose deletion increases the number of connected components"""
    components = len(g.connected_components())
    cuts = set()
    for v in g.vertices:
        rest = g.without_vertex(v)
        # deleting an isolated vertex removes a component
        if len(rest.connected_components()) > components - (g.degree(v) == 0):
            cuts.add(v)
    return cuts


def _same_block(g: Graph, e: tuple[str, str], f: tuple[str, str]) -> bool:
    """no single vertex separates the two edges"""
    for w in g.vertices:
        rest = g.without_vertex(w)
        ends = [v for v in (*e, *f) if v != w]
        component = next(c for c in rest.connected_components() if ends[0] in c)
        if any(v not in component for v in ends):
            return False
    return True


def brute_force_classification(g: Graph) -> Classification:
    """
    classification from first principles: blocks are grown from pairs of edges no
    vertex separates, kinds are read off vertex and edge counts
    """
    connected = g.is_connected()
    cuts = brute_force_cut_vertices(g)
    groups: list[list[tuple[str, str]]] = []
    for edge in g.edges:
        group = next((grp for grp in groups if _same_block(g, grp[0], edge)), None)
        if group is None:
            groups.append([edge])
        else:
            group.append(edge)

    is_cactus = is_block_graph = connected
    universal = True
    for group in groups:
        vertices = {v for edge in group for v in edge}
        n, m = len(vertices), len(group)
        is_clique = m == n * (n - 1) // 2
        is_cycle = m == n
        is_cactus = is_cactus and (n == 2 or is_cycle)
        is_block_graph = is_block_graph and is_clique
        block_edges = {edge_key(u, v) for u, v in group}
        for v in vertices & cuts:
            if any(edge_key(v, w) not in block_edges for w in vertices if w != v):
                universal = False
    return Classification(
        is_tree=connected and g.edge_count == len(g) - 1,
        is_cactus=is_cactus,
        is_block_graph=is_block_graph,
        satisfies_universal_cut_condition=universal,
    )
