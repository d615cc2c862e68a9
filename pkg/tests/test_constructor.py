import time

import pytest

from blocks import biconnected_components, build_bc_tree, classify_instance
from config import SIZE_CONSTANT
from conftest import cycle_graph
from constructor import allocate_regions, construct, place_side_by_side, resolve_mode, resolved_policy
from generators import random_block_graph, random_cactus, random_composed_graph
from graph import Graph, parse_graph
from path import GridPath, Representation, analyze_path, edge_intersection_graph, verify_representation
from utils import HypothesisError, MissingBlockRepresentationError, Mode, Shape, ShapePolicy


def check(g, rep, policy):
    report = verify_representation(rep, g, policy)
    assert report.passed, report.summary()
    assert rep.side_length <= SIZE_CONSTANT * max(1, len(g))
    return report


def diamond_rep():
    return Representation({
        "r": GridPath.from_corners([(0, 4), (0, 0), (4, 0)]),
        "x": GridPath.from_corners([(0, 2), (0, 4)]),
        "y": GridPath.from_corners([(0, 3), (0, 0), (3, 0)]),
        "z": GridPath.from_corners([(2, 0), (4, 0)]),
    })


def cycle_off_a_cut_vertex(k):
    """the cycle c0 ... c(k-1) with a pendant edge h c0, every cycle vertex carrying a leaf"""
    g = cycle_graph(k)
    edges = g.edges + [("h", "c0")] + [(f"c{i}", f"leaf{i}") for i in range(1, k)]
    return Graph(g.vertices + ["h"], edges)


class TestTreeT:
    def test_block_graph_mode(self, tree_t):
        rep = construct(tree_t, Mode.BLOCK_GRAPH)
        report = check(tree_t, rep, ShapePolicy.L_ONLY)
        assert len(rep) == 9
        assert report.max_bends == 1
        assert rep.shape_census() == {"H": 3, "L": 3, "V": 3}
        assert rep.side_length <= 4 * len(tree_t)

    def test_layout(self, tree_t):
        rep = construct(tree_t, Mode.BLOCK_GRAPH)
        assert rep["v1"] == GridPath.from_corners([(0, 0), (0, 8)])
        assert rep["v2"] == GridPath.from_corners([(0, 1), (0, 0), (5, 0)])
        assert rep["v7"] == GridPath.from_corners([(5, 3), (4, 3), (4, 8)])
        assert rep["v9"] == GridPath.from_corners([(4, 7), (4, 8)])

    def test_auto_picks_block_graph(self, tree_t):
        assert construct(tree_t) == construct(tree_t, Mode.BLOCK_GRAPH)

    def test_cactus_mode(self, tree_t):
        check(tree_t, construct(tree_t, Mode.CACTUS), ShapePolicy.B1)

    def test_explicit_root(self, tree_t):
        rep = construct(tree_t, Mode.BLOCK_GRAPH, root="v7")
        check(tree_t, rep, ShapePolicy.L_ONLY)
        assert analyze_path(rep["v7"]).shape == Shape.V

    def test_root_must_be_a_cut_vertex(self, tree_t):
        with pytest.raises(HypothesisError):
            construct(tree_t, root="v4")

    def test_restriction_to_a_subtree(self, tree_t):
        rep = construct(tree_t, Mode.BLOCK_GRAPH)
        subtree = ["v3", "v6", "v7", "v8", "v9"]
        check(tree_t.subgraph(subtree), rep.restrict(subtree), ShapePolicy.L_ONLY)


class TestSmallGraphs:
    def test_empty(self):
        assert len(construct(Graph())) == 0

    def test_single_vertex(self):
        rep = construct(Graph(["a"]))
        assert rep["a"] == GridPath.from_corners([(0, 0), (1, 0)])

    def test_single_edge(self):
        g = parse_graph("a b")
        rep = construct(g)
        assert rep["a"] == rep["b"] == GridPath.from_corners([(0, 0), (1, 0)])
        check(g, rep, ShapePolicy.L_ONLY)

    def test_star(self):
        g = parse_graph("c a\nc b\nc d\n")
        rep = construct(g, Mode.BLOCK_GRAPH)
        check(g, rep, ShapePolicy.L_ONLY)
        assert rep["c"] == GridPath.from_corners([(0, 0), (0, 7)])

    def test_star_bands(self):
        g = parse_graph("c a\nc b\nc d\n")
        blocks, cuts = biconnected_components(g)
        budgets = allocate_regions(build_bc_tree(g, blocks, cuts), blocks)
        assert [band.base for band in budgets["c"].bands] == [0, 3, 6]
        assert budgets["c"].height == 7

    def test_two_triangles(self):
        g = parse_graph("a b\nb c\nc a\nc d\nd e\ne c\n")
        check(g, construct(g, Mode.BLOCK_GRAPH), ShapePolicy.L_ONLY)
        check(g, construct(g, Mode.CACTUS), ShapePolicy.B1)

    def test_clique_chain(self):
        g = parse_graph("a b\nb c\nc a\nc d\nd e\nd f\nd g\ne f\ne g\nf g\n")
        rep = construct(g)
        check(g, rep, ShapePolicy.L_ONLY)

    @pytest.mark.parametrize("k", range(3, 11))
    def test_single_cycle(self, k):
        g = cycle_graph(k)
        check(g, construct(g), ShapePolicy.B1)

    def test_single_clique(self):
        g = parse_graph("a b\na c\na d\nb c\nb d\nc d\n")
        check(g, construct(g), ShapePolicy.L_ONLY)


class TestCactus:
    @pytest.mark.parametrize("k", range(3, 11))
    def test_cycle_hanging_off_a_cut_vertex(self, k):
        g = cycle_off_a_cut_vertex(k)
        rep = construct(g, Mode.CACTUS)
        check(g, rep, ShapePolicy.B1)
        assert rep.max_bends() <= 1

    @pytest.mark.parametrize("k", range(3, 8))
    def test_nested_cycles(self, k):
        inner = cycle_graph(k, "d")
        outer = cycle_graph(k)
        g = Graph(outer.vertices + inner.vertices,
                  outer.edges + inner.edges + [("c1", "d0"), (f"c{k - 1}", "x"), ("x", "y")])
        check(g, construct(g, Mode.CACTUS), ShapePolicy.B1)

    def test_four_cycles_on_four_cycles(self):
        edges = []
        for level in range(4):
            ring = [f"u{level}"] + [f"w{level}_{i}" for i in range(3)]
            edges += [(ring[i], ring[(i + 1) % 4]) for i in range(4)]
            if level:
                edges.append((f"w{level - 1}_1", f"u{level}"))
        g = Graph([], edges)
        check(g, construct(g, Mode.CACTUS), ShapePolicy.B1)

    def test_random_cacti(self):
        for seed in range(10):
            for n in range(2, 101, 2):
                g = random_cactus(n, seed)
                check(g, construct(g, Mode.CACTUS), ShapePolicy.B1)

    def test_cactus_mode_rejects_cliques(self):
        g = parse_graph("a b\na c\na d\nb c\nb d\nc d\nd e\n")
        with pytest.raises(HypothesisError) as info:
            construct(g, Mode.CACTUS)
        assert info.value.block_id == 0

    def test_long_cycle_has_no_l_only_construction(self):
        g = cycle_off_a_cut_vertex(5)
        with pytest.raises(HypothesisError):
            construct(g, Mode.BLOCK_GRAPH)


class TestBlockGraph:
    def test_random_block_graphs(self):
        for seed in range(25):
            for n in range(5, 101, 5):
                g = random_block_graph(n, seed)
                check(g, construct(g, Mode.BLOCK_GRAPH), ShapePolicy.L_ONLY)

    def test_root_is_a_bend_free_column(self):
        g = random_block_graph(40, 3)
        blocks, cuts = biconnected_components(g)
        root = build_bc_tree(g, blocks, cuts).root
        rep = construct(g, Mode.BLOCK_GRAPH)
        assert analyze_path(rep[root]).shape == Shape.V
        assert {p.x for p in rep[root].points} == {0}


class TestGeneralModes:
    def test_diamond_with_pendant(self, diamond_with_pendant):
        reps = {0: diamond_rep()}
        for mode, policy in ((Mode.GENERAL_B1, ShapePolicy.B1), (Mode.GENERAL_L, ShapePolicy.L_ONLY)):
            rep = construct(diamond_with_pendant, mode, reps)
            check(diamond_with_pendant, rep, policy)
            assert rep["r"] == GridPath.from_corners([(0, 0), (0, 11)])

    def test_auto_falls_back_to_general(self, diamond_with_pendant):
        rep = construct(diamond_with_pendant, Mode.AUTO, {0: diamond_rep()})
        check(diamond_with_pendant, rep, ShapePolicy.B1)

    def test_missing_block_representation(self, diamond_with_pendant):
        with pytest.raises(MissingBlockRepresentationError) as info:
            construct(diamond_with_pendant, Mode.GENERAL_B1)
        assert info.value.block_id == 0
        assert info.value.exit_code == 3

    def test_wrong_block_representation(self, diamond_with_pendant):
        paths = dict(diamond_rep().paths)
        paths["x"] = GridPath.from_corners([(0, 6), (0, 8)])
        with pytest.raises(HypothesisError):
            construct(diamond_with_pendant, Mode.GENERAL_B1, {0: Representation(paths)})

    def test_violating_attachment(self):
        g = parse_graph("a b\na c\nb c\nb d\nc d\na e\n")
        with pytest.raises(HypothesisError) as info:
            construct(g, Mode.GENERAL_L)
        assert (info.value.cut_vertex, info.value.block_id) == ("a", 0)

    def test_single_block_needs_a_representation(self):
        g = parse_graph("a b\na c\nb c\nb d\nc d\n")
        with pytest.raises(MissingBlockRepresentationError):
            construct(g)
        rep = Representation({
            "b": GridPath.from_corners([(0, 4), (0, 0), (4, 0)]),
            "a": GridPath.from_corners([(0, 2), (0, 4)]),
            "c": GridPath.from_corners([(0, 3), (0, 0), (3, 0)]),
            "d": GridPath.from_corners([(2, 0), (4, 0)]),
        })
        check(g, construct(g, block_reps={0: rep}), ShapePolicy.L_ONLY)

    @pytest.mark.parametrize("seed", range(100))
    def test_composed_cliques(self, seed):
        g = random_composed_graph(10 + seed % 50, seed)
        check(g, construct(g, Mode.GENERAL_B1), ShapePolicy.B1)
        check(g, construct(g, Mode.GENERAL_L), ShapePolicy.L_ONLY)

    def test_block_with_groups_on_both_sides_of_the_root(self):
        # u4 runs along the horizontal leg of u0, u1 and u2 hold legs nobody else uses
        block = {
            "u0": [(3, 2), (3, 1), (-1, 1)],
            "u1": [(0, -2), (0, 1), (1, 1)],
            "u2": [(2, 4), (2, 1), (5, 1)],
            "u3": [(2, -3), (2, 1), (3, 1)],
            "u4": [(-1, 1), (3, 1)],
        }
        rep = Representation({v: GridPath.from_corners(c) for v, c in block.items()})
        g = Graph(list(block) + ["w"], edge_intersection_graph(rep).edges + [("u0", "w")])
        assert verify_representation(rep, g.subgraph(block), ShapePolicy.B1).passed
        result = construct(g, Mode.GENERAL_B1, {0: rep})
        check(g, result, ShapePolicy.B1)
        assert analyze_path(result["u0"]).shape == Shape.V

    def test_resolve_mode(self, tree_t):
        blocks, cuts = biconnected_components(tree_t)
        flags = classify_instance(tree_t, blocks, cuts)
        assert resolve_mode(Mode.AUTO, flags, blocks, cuts) is Mode.BLOCK_GRAPH
        assert resolve_mode(Mode.GENERAL_L, flags, blocks, cuts) is Mode.GENERAL_L

    def test_resolved_policy(self, tree_t):
        assert resolved_policy(tree_t, Mode.AUTO) is ShapePolicy.L_ONLY
        assert resolved_policy(tree_t, Mode.CACTUS) is ShapePolicy.B1
        assert resolved_policy(cycle_graph(5), Mode.AUTO) is ShapePolicy.B1
        mixed = Graph(tree_t.vertices + ["a", "b"], tree_t.edges + [("a", "b")])
        assert resolved_policy(mixed, Mode.AUTO) is ShapePolicy.L_ONLY
        assert resolved_policy(Graph(["a"]), Mode.AUTO) is ShapePolicy.L_ONLY


class TestDisconnected:
    def test_components_side_by_side(self):
        g = parse_graph("a b\nc d\ne\n")
        rep = construct(g)
        check(g, rep, ShapePolicy.L_ONLY)
        assert list(rep.paths) == ["a", "b", "c", "d", "e"]
        assert rep["c"] == GridPath.from_corners([(3, 0), (4, 0)])
        assert rep["e"] == GridPath.from_corners([(6, 0), (7, 0)])

    def test_mixed_components(self, tree_t):
        g = Graph(tree_t.vertices + cycle_graph(6).vertices, tree_t.edges + cycle_graph(6).edges)
        check(g, construct(g), ShapePolicy.B1)

    def test_place_side_by_side_skips_empty(self):
        one = Representation({"a": GridPath.from_corners([(5, 5), (5, 7)])})
        placed = place_side_by_side([Representation(), one, one.restrict([])])
        assert placed["a"] == GridPath.from_corners([(0, 0), (0, 2)])


@pytest.mark.slow
class TestScaling:
    def timed(self, n):
        g = random_cactus(n, 0)
        start = time.perf_counter()
        rep = construct(g, Mode.CACTUS)
        assert verify_representation(rep, g, ShapePolicy.B1).passed
        return time.perf_counter() - start

    def test_tenfold_size_is_at_most_fifteenfold_time(self):
        small = min(self.timed(10_000) for _ in range(2))
        large = self.timed(100_000)
        assert large / small <= 15
