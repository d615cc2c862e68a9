"""
biconnected decomposition, block-cutpoint trees and instance classification

the decomposition is the iterative lowpoint depth first search (hopcroft-tarjan),
written with an explicit stack so deep graphs do not hit the recursion limit
"""
from __future__ import annotations
import logging
from collections import deque
from dataclasses import dataclass, field

from graph import Graph, edge_key
from utils import (
    BlockKind,
    BlockType,
    DisconnectedGraphError,
    HypothesisError,
    SingleBlockError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Block:
    """maximal biconnected subgraph (or bridge), vertices in input order"""
    id: int
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    kind: BlockKind

    def __contains__(self, v: str) -> bool:
        return v in self.vertices

    def non_cut_vertices(self, cuts) -> list[str]:
        return [v for v in self.vertices if v not in cuts]

    def cycle_order(self, start: str) -> list[str]:
        """
        vertices of a cycle block walked from start, the first step goes to the
        neighbour of start that comes first in input order
        """
        adjacency: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        position = {v: i for i, v in enumerate(self.vertices)}
        first = min(adjacency[start], key=position.__getitem__)
        order = [start, first]
        while len(order) < len(self.vertices):
            previous, current = order[-2], order[-1]
            order.append(next(w for w in adjacency[current] if w != previous))
        return order


def classify_block(vertices: list[str], edges: list[tuple[str, str]]) -> BlockKind:
    """
    block kind from its size and degrees
    two vertices are always an Edge, a triangle is Cycle(3) flagged as a clique
    """
    n, m = len(vertices), len(edges)
    if n == 2:
        return BlockKind(BlockType.EDGE, 2, True)
    degree = dict.fromkeys(vertices, 0)
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    if m == n and all(d == 2 for d in degree.values()):
        return BlockKind(BlockType.CYCLE, n, n == 3)
    if m == n * (n - 1) // 2:
        return BlockKind(BlockType.CLIQUE, n, True)
    return BlockKind(BlockType.OTHER, n, False)


def _biconnected_edge_groups(g: Graph, start: str) -> list[list[tuple[str, str]]]:
    """edge lists of the biconnected components reachable from start"""
    discovery = {start: 0}
    low = {start: 0}
    edge_stack: list[tuple[str, str]] = []
    # stack position of the tree edge that discovered each vertex
    tree_edge_at: dict[str, int] = {}
    groups = []
    stack = [(start, start, iter(g.neighbors(start)))]
    while stack:
        grandparent, parent, children = stack[-1]
        try:
            child = next(children)
        except StopIteration:
            stack.pop()
            if len(stack) > 1:
                if low[parent] >= discovery[grandparent]:
                    index = tree_edge_at[parent]
                    groups.append(edge_stack[index:])
                    del edge_stack[index:]
                low[grandparent] = min(low[parent], low[grandparent])
            elif stack:
                # grandparent is the dfs root
                index = tree_edge_at[parent]
                groups.append(edge_stack[index:])
                del edge_stack[index:]
            continue
        if grandparent == child:
            continue
        if child in discovery:
            if discovery[child] <= discovery[parent]:
                # back edge
                low[parent] = min(low[parent], discovery[child])
                edge_stack.append((parent, child))
        else:
            low[child] = discovery[child] = len(discovery)
            stack.append((parent, child, iter(g.neighbors(child))))
            tree_edge_at[child] = len(edge_stack)
            edge_stack.append((parent, child))
    return groups


def biconnected_components(g: Graph) -> tuple[list[Block], set[str]]:
    """
    split a connected graph into blocks

    returns:
        blocks ordered by the input position of their first edge (ids follow that order)
        and the set of cut vertices, the vertices lying in two or more blocks

    raises:
        DisconnectedGraphError when g has more than one component
    """
    if len(g) == 0:
        return [], set()
    if not g.is_connected():
        raise DisconnectedGraphError(
            "graph is disconnected, decompose each connected component separately")

    edge_position = {edge_key(u, v): i for i, (u, v) in enumerate(g.edges)}
    vertex_position = {v: i for i, v in enumerate(g.vertices)}
    groups = _biconnected_edge_groups(g, g.vertices[0])
    # restore the input orientation of every edge and sort by input position
    ordered_groups = []
    for group in groups:
        positions = sorted(edge_position[edge_key(u, v)] for u, v in group)
        ordered_groups.append(positions)
    ordered_groups.sort(key=lambda positions: positions[0])

    all_edges = g.edges
    blocks = []
    membership: dict[str, int] = {}
    for block_id, positions in enumerate(ordered_groups):
        edges = [all_edges[i] for i in positions]
        vertex_set = {v for edge in edges for v in edge}
        vertices = sorted(vertex_set, key=vertex_position.__getitem__)
        for v in vertices:
            membership[v] = membership.get(v, 0) + 1
        blocks.append(Block(block_id, tuple(vertices), tuple(edges), classify_block(vertices, edges)))

    cuts = {v for v, count in membership.items() if count >= 2}
    logger.debug("decomposed %r into %d blocks, %d cut vertices", g, len(blocks), len(cuts))
    return blocks, cuts


@dataclass
class BCTree:
    """
    block-cutpoint tree, bipartite between block ids and cut vertex labels
    when rooted the parent / children maps are filled, children in deterministic
    order (block ids ascending, cut labels in input order)
    """
    block_nodes: list[int]
    cut_nodes: list[str]
    tree_edges: list[tuple[str, int]]
    root: str | None = None
    block_children: dict[str, list[int]] = field(default_factory=dict)
    cut_children: dict[int, list[str]] = field(default_factory=dict)
    block_parent: dict[int, str] = field(default_factory=dict)
    cut_parent: dict[str, int] = field(default_factory=dict)

    @property
    def node_count(self) -> int:
        return len(self.block_nodes) + len(self.cut_nodes)

    def parent_pointers(self) -> dict[str, str | None]:
        """printable parent map, block nodes written as 'B<id>'"""
        pointers: dict[str, str | None] = {}
        if self.root is not None:
            pointers[self.root] = None
        for block_id, cut in self.block_parent.items():
            pointers[f"B{block_id}"] = cut
        for cut, block_id in self.cut_parent.items():
            pointers[cut] = f"B{block_id}"
        return pointers


def build_bc_tree(g: Graph, blocks: list[Block], cuts: set[str],
                  root: str | None = None, rooted: bool = True) -> BCTree:
    """
    build the block-cutpoint tree, rooted at a cut vertex when requested

    args:
        root: cut vertex to root at, default is the first cut vertex in input order
        rooted: false builds the bare bipartite tree

    raises:
        SingleBlockError when a rooted tree is asked for a graph without cut vertex
        HypothesisError when root is given but is not a cut vertex
    """
    cut_nodes = [v for v in g.vertices if v in cuts]
    tree_edges = [(v, block.id) for block in blocks for v in block.vertices if v in cuts]
    tree = BCTree([block.id for block in blocks], cut_nodes, tree_edges)
    if not rooted:
        return tree
    if not cut_nodes:
        raise SingleBlockError("graph has no cut vertex, it consists of a single block")
    if root is None:
        root = cut_nodes[0]
    elif root not in cuts:
        raise HypothesisError(f"requested root {root} is not a cut vertex", cut_vertex=root)
    tree.root = root

    blocks_of: dict[str, list[int]] = {v: [] for v in cut_nodes}
    for v, block_id in tree_edges:
        blocks_of[v].append(block_id)
    vertex_position = {v: i for i, v in enumerate(g.vertices)}
    queue = deque([root])
    while queue:
        cut = queue.popleft()
        children = [b for b in sorted(blocks_of[cut]) if b != tree.cut_parent.get(cut)]
        tree.block_children[cut] = children
        for block_id in children:
            tree.block_parent[block_id] = cut
            grand = sorted((v for v in blocks[block_id].vertices if v in cuts and v != cut),
                           key=vertex_position.__getitem__)
            tree.cut_children[block_id] = grand
            for child_cut in grand:
                tree.cut_parent[child_cut] = block_id
                queue.append(child_cut)
    return tree


@dataclass(frozen=True)
class Classification:
    is_tree: bool
    is_cactus: bool
    is_block_graph: bool
    satisfies_universal_cut_condition: bool
    # (cut vertex, block id) pairs where the cut vertex is not universal
    violations: tuple[tuple[str, int], ...] = ()

    def as_dict(self) -> dict[str, bool]:
        return {
            "tree": self.is_tree,
            "cactus": self.is_cactus,
            "block_graph": self.is_block_graph,
            "universal": self.satisfies_universal_cut_condition,
        }


def universal_violations(g: Graph, blocks: list[Block], cuts: set[str]) -> list[tuple[str, int]]:
    """cut vertices not adjacent to every other vertex of one of their blocks"""
    violations = []
    for block in blocks:
        for v in block.vertices:
            if v in cuts and any(w != v and not g.has_edge(v, w) for w in block.vertices):
                violations.append((v, block.id))
    return violations


def classify_instance(g: Graph, blocks: list[Block], cuts: set[str]) -> Classification:
    """
    flags for the hypotheses of the constructions
    cactus and block-graph are decided from block kinds, the universal condition by adjacency
    """
    connected = g.is_connected()
    kinds = [block.kind for block in blocks]
    violations = universal_violations(g, blocks, cuts)
    return Classification(
        is_tree=connected and all(k.type == BlockType.EDGE for k in kinds),
        is_cactus=connected and all(k.type in (BlockType.EDGE, BlockType.CYCLE) for k in kinds),
        is_block_graph=connected and all(k.is_clique for k in kinds),
        satisfies_universal_cut_condition=not violations,
        violations=tuple(violations),
    )
