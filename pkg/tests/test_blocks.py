import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from blocks import Block, biconnected_components, build_bc_tree, classify_block, classify_instance
from conftest import cycle_graph
from graph import Graph, parse_graph
from utils import BlockKind, BlockType, DisconnectedGraphError, HypothesisError, SingleBlockError


def decompose(text):
    g = parse_graph(text)
    blocks, cuts = biconnected_components(g)
    return g, blocks, cuts


class TestClassifyBlock:
    def test_edge(self):
        assert classify_block(["a", "b"], [("a", "b")]) == BlockKind(BlockType.EDGE, 2, True)

    def test_triangle_is_a_clique_cycle(self):
        kind = classify_block(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
        assert kind.type == BlockType.CYCLE
        assert kind.size == 3
        assert kind.is_clique
        assert str(kind) == "Cycle(3)"

    def test_k4(self):
        vertices = list("abcd")
        edges = [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]]
        assert classify_block(vertices, edges) == BlockKind(BlockType.CLIQUE, 4, True)

    def test_diamond_is_other(self):
        kind = classify_block(list("abcd"), [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d")])
        assert kind.type == BlockType.OTHER
        assert not kind.is_clique


class TestBiconnectedComponents:
    def test_path(self):
        _, blocks, cuts = decompose("a b\nb c\n")
        assert cuts == {"b"}
        assert [b.vertices for b in blocks] == [("a", "b"), ("b", "c")]
        assert all(b.kind.type == BlockType.EDGE for b in blocks)

    def test_tree_t(self, tree_t):
        blocks, cuts = biconnected_components(tree_t)
        assert len(blocks) == 8
        assert cuts == {"v1", "v2", "v3", "v7"}
        assert [b.id for b in blocks] == list(range(8))
        assert blocks[5].vertices == ("v3", "v7")

    def test_single_cycle(self):
        blocks, cuts = biconnected_components(cycle_graph(5))
        assert cuts == set()
        assert len(blocks) == 1
        assert str(blocks[0].kind) == "Cycle(5)"

    def test_triangle_with_pendant(self):
        _, blocks, cuts = decompose("a b\nb c\nc a\nc d\n")
        assert cuts == {"c"}
        assert [str(b.kind) for b in blocks] == ["Cycle(3)", "Edge"]
        assert blocks[0].kind.is_clique

    def test_single_vertex(self):
        blocks, cuts = biconnected_components(Graph(["a"]))
        assert blocks == [] and cuts == set()

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            biconnected_components(parse_graph("a b\nc d\n"))

    def test_edges_keep_input_orientation(self):
        _, blocks, _ = decompose("b a\nc b\n")
        assert blocks[0].edges == (("b", "a"),)
        assert blocks[1].edges == (("c", "b"),)

    def test_deep_path_does_not_recurse(self):
        n = 5000
        g = Graph([f"v{i}" for i in range(n)], [(f"v{i}", f"v{i + 1}") for i in range(n - 1)])
        blocks, cuts = biconnected_components(g)
        assert len(blocks) == n - 1
        assert len(cuts) == n - 2

    def test_cycle_order(self):
        _, blocks, _ = decompose("r a\na b\nb c\nc r\n")
        assert blocks[0].cycle_order("r") == ["r", "a", "b", "c"]
        assert blocks[0].cycle_order("b") == ["b", "a", "r", "c"]

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 40), st.integers(0, 30), st.integers(0, 2**32 - 1))
    def test_matches_networkx(self, n, extra, seed):
        rng = np.random.default_rng(seed)
        labels = [f"v{i}" for i in range(n)]
        edges = {frozenset((labels[i], labels[int(rng.integers(i))])) for i in range(1, n)}
        for _ in range(extra):
            u, v = rng.choice(n, size=2, replace=False)
            edges.add(frozenset((labels[u], labels[v])))
        g = Graph(labels, [tuple(sorted(e)) for e in sorted(edges, key=sorted)])
        blocks, cuts = biconnected_components(g)

        reference = nx.Graph(g.edges)
        assert cuts == set(nx.articulation_points(reference))
        assert {frozenset(b.vertices) for b in blocks} == {
            frozenset(c) for c in nx.biconnected_components(reference)}
        assert sum(len(b.edges) for b in blocks) == g.edge_count


class TestBCTree:
    def test_tree_t_default_root(self, tree_t):
        blocks, cuts = biconnected_components(tree_t)
        tree = build_bc_tree(tree_t, blocks, cuts)
        assert tree.root == "v1"
        assert tree.node_count == 12
        assert tree.block_children["v1"] == [0, 1]
        assert tree.cut_children[1] == ["v3"]
        assert tree.block_children["v7"] == [6, 7]
        pointers = tree.parent_pointers()
        assert pointers["v1"] is None
        assert pointers["v7"] == "B5"
        assert pointers["B5"] == "v3"

    def test_explicit_root(self, tree_t):
        blocks, cuts = biconnected_components(tree_t)
        tree = build_bc_tree(tree_t, blocks, cuts, root="v7")
        assert tree.block_children["v7"] == [5, 6, 7]
        assert tree.cut_parent["v3"] == 5

    def test_root_must_be_a_cut_vertex(self, tree_t):
        blocks, cuts = biconnected_components(tree_t)
        with pytest.raises(HypothesisError):
            build_bc_tree(tree_t, blocks, cuts, root="v4")

    def test_single_block_has_no_root(self):
        g = cycle_graph(4)
        blocks, cuts = biconnected_components(g)
        with pytest.raises(SingleBlockError):
            build_bc_tree(g, blocks, cuts)
        bare = build_bc_tree(g, blocks, cuts, rooted=False)
        assert bare.root is None
        assert bare.node_count == 1

    def test_tree_edges(self):
        g, blocks, cuts = decompose("a b\nb c\n")
        assert build_bc_tree(g, blocks, cuts, rooted=False).tree_edges == [("b", 0), ("b", 1)]


class TestClassification:
    def test_c4_with_pendant(self):
        g, blocks, cuts = decompose("a b\nb c\nc d\nd a\na e\n")
        flags = classify_instance(g, blocks, cuts)
        assert flags.as_dict() == {"tree": False, "cactus": True, "block_graph": False, "universal": False}
        assert flags.violations == (("a", 0),)

    def test_two_triangles_sharing_a_vertex(self):
        g, blocks, cuts = decompose("a b\nb c\nc a\nc d\nd e\ne c\n")
        assert classify_instance(g, blocks, cuts).as_dict() == {
            "tree": False, "cactus": True, "block_graph": True, "universal": True}

    def test_tree_t(self, tree_t):
        blocks, cuts = biconnected_components(tree_t)
        assert all(classify_instance(tree_t, blocks, cuts).as_dict().values())

    def test_diamond_with_non_universal_attachment(self):
        g, blocks, cuts = decompose("a b\na c\nb c\nb d\nc d\na e\n")
        flags = classify_instance(g, blocks, cuts)
        assert not flags.is_cactus
        assert not flags.is_block_graph
        assert flags.violations == (("a", 0),)

    def test_diamond_with_universal_attachment(self, diamond_with_pendant):
        blocks, cuts = biconnected_components(diamond_with_pendant)
        flags = classify_instance(diamond_with_pendant, blocks, cuts)
        assert flags.satisfies_universal_cut_condition
        assert not flags.is_cactus

    def test_block_dataclass(self):
        block = Block(0, ("a", "b"), (("a", "b"),), BlockKind(BlockType.EDGE))
        assert "a" in block
        assert block.non_cut_vertices({"a"}) == ["b"]
