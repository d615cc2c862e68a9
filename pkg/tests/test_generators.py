import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from blocks import biconnected_components, classify_instance
from constructor import construct
from generators import (
    brute_force_classification,
    brute_force_cut_vertices,
    naive_intersection_oracle,
    random_block_graph,
    random_cactus,
    random_composed_graph,
    random_tree,
)
from graph import Graph, parse_graph
from path import GridPath, Representation, edge_intersection_graph
from utils import BlockType, Mode

seeds = st.integers(0, 2**32 - 1)


def classification(g):
    blocks, cuts = biconnected_components(g)
    return classify_instance(g, blocks, cuts)


def random_staircases(rng, count):
    """monotone staircases, simple by construction"""
    paths = {}
    for index in range(count):
        x, y = (int(c) for c in rng.integers(-4, 5, size=2))
        sx, sy = (int(s) for s in rng.choice([-1, 1], size=2))
        corners = [(x, y)]
        for turn in range(int(rng.integers(1, 4))):
            step = int(rng.integers(1, 4))
            x, y = (x + sx * step, y) if turn % 2 == 0 else (x, y + sy * step)
            corners.append((x, y))
        paths[f"p{index}"] = GridPath.from_corners(corners)
    return Representation(paths)


class TestGenerators:
    def test_tree_of_two(self):
        assert random_tree(2, seed=0).to_edge_list() == "v0 v1\n"

    def test_single_vertex(self):
        g = random_tree(1)
        assert g.vertices == ["v0"]
        assert g.edge_count == 0

    def test_n_must_be_positive(self):
        with pytest.raises(ValueError):
            random_tree(0)
        with pytest.raises(ValueError):
            random_block_graph(5, clique_max=1)
        with pytest.raises(ValueError):
            random_composed_graph(4, universal=False)

    @pytest.mark.parametrize("generate", [random_tree, random_cactus, random_block_graph, random_composed_graph])
    def test_deterministic(self, generate):
        assert generate(60, 11).to_edge_list() == generate(60, 11).to_edge_list()
        assert generate(60, 11).vertices == [f"v{i}" for i in range(60)]

    def test_seeds_differ(self):
        assert random_cactus(60, 1) != random_cactus(60, 2)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 80), seeds)
    def test_tree(self, n, seed):
        g = random_tree(n, seed)
        assert len(g) == n
        assert g.edge_count == n - 1
        assert g.is_connected()

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 80), seeds)
    def test_cactus(self, n, seed):
        g = random_cactus(n, seed)
        assert len(g) == n
        assert nx.is_connected(nx.Graph(g.edges))
        assert classification(g).is_cactus

    def test_cactus_without_cycles_is_a_tree(self):
        assert classification(random_cactus(50, 3, cycle_bias=0.0)).is_tree

    @pytest.mark.parametrize("n", range(3, 30))
    def test_cactus_with_only_cycles(self, n):
        g = random_cactus(n, n, cycle_bias=1.0)
        blocks, _ = biconnected_components(g)
        assert all(block.kind.type is BlockType.CYCLE for block in blocks)
        assert all(3 <= block.kind.size <= 8 for block in blocks)

    def test_cactus_cycle_max(self):
        blocks, _ = biconnected_components(random_cactus(200, 5, cycle_bias=1.0, cycle_max=4))
        assert max(block.kind.size for block in blocks) <= 4

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 80), seeds)
    def test_block_graph(self, n, seed):
        g = random_block_graph(n, seed)
        assert len(g) == n
        assert classification(g).is_block_graph

    def test_block_graph_with_edges_only_is_a_tree(self):
        assert classification(random_block_graph(40, 7, clique_max=2)).is_tree

    @settings(max_examples=30, deadline=None)
    @given(st.integers(5, 60), seeds)
    def test_composed(self, n, seed):
        flags = classification(random_composed_graph(n, seed))
        assert flags.satisfies_universal_cut_condition
        violating = random_composed_graph(n, seed, universal=False)
        assert len(violating) == n
        assert not classification(violating).satisfies_universal_cut_condition


class TestOracles:
    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 9), seeds)
    def test_naive_intersection_matches(self, count, seed):
        r = random_staircases(np.random.default_rng(seed), count)
        assert naive_intersection_oracle(r) == edge_intersection_graph(r)

    def test_naive_intersection_example(self):
        r = Representation({
            "a": GridPath.from_corners([(0, 0), (2, 0)]),
            "b": GridPath.from_corners([(1, 1), (1, 0), (2, 0)]),
            "c": GridPath.from_corners([(1, -1), (1, 1)]),
        })
        assert naive_intersection_oracle(r).edge_set() == {frozenset("ab"), frozenset("bc")}

    def test_cut_vertices_example(self, tree_t):
        assert brute_force_cut_vertices(tree_t) == {"v1", "v2", "v3", "v7"}
        assert brute_force_cut_vertices(parse_graph("a b\nb c\nc a\n")) == set()

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 14), st.integers(0, 8), seeds)
    def test_cut_vertices_match(self, n, extra, seed):
        rng = np.random.default_rng(seed)
        labels = [f"v{i}" for i in range(n)]
        edges = {frozenset((labels[i], labels[int(rng.integers(i))])) for i in range(1, n)}
        for _ in range(extra):
            u, v = (int(i) for i in rng.choice(n, size=2, replace=False))
            edges.add(frozenset((labels[u], labels[v])))
        g = Graph(labels, [tuple(sorted(e)) for e in sorted(edges, key=sorted)])
        _, cuts = biconnected_components(g)
        assert brute_force_cut_vertices(g) == cuts
        assert brute_force_classification(g).as_dict() == classification(g).as_dict()

    @pytest.mark.parametrize("seed", range(6))
    def test_classification_matches_on_generated(self, seed):
        for g in (random_cactus(14, seed), random_block_graph(12, seed), random_composed_graph(12, seed),
                  random_composed_graph(10, seed, universal=False)):
            assert brute_force_classification(g).as_dict() == classification(g).as_dict()

    @pytest.mark.parametrize("generate, mode", [
        (random_tree, Mode.BLOCK_GRAPH),
        (random_cactus, Mode.CACTUS),
        (random_block_graph, Mode.BLOCK_GRAPH),
        (random_composed_graph, Mode.GENERAL_B1),
    ])
    @pytest.mark.parametrize("seed", range(25))
    def test_naive_intersection_on_constructions(self, generate, mode, seed):
        g = generate(8 + seed, seed)
        rep = construct(g, mode)
        naive = naive_intersection_oracle(rep)
        assert naive == edge_intersection_graph(rep)
        assert naive.edge_set() == g.edge_set()
