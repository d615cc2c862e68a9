"""
exact integer transforms of representations and the block normalisation surgery

every transform is an isometry of the grid, so the intersection graph and the
bend counts of the paths never change; only shapes are permuted
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from enum import Enum

from graph import Graph
from path import GridPath, Representation, analyze_path, edge_intersection_graph, edge_owners, shape_allowed
from utils import GridPoint, NormalizationError, Shape, ShapePolicy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Affine:
    """(x, y) -> (a x + b y + tx, c x + d y + ty) with an orthogonal integer matrix"""
    a: int = 1
    b: int = 0
    c: int = 0
    d: int = 1
    tx: int = 0
    ty: int = 0

    def apply(self, x: int, y: int) -> GridPoint:
        return GridPoint(self.a * x + self.b * y + self.tx, self.c * x + self.d * y + self.ty)

    def then(self, other: Affine) -> Affine:
        """the transform applying self first and other second"""
        return Affine(
            other.a * self.a + other.b * self.c,
            other.a * self.b + other.b * self.d,
            other.c * self.a + other.d * self.c,
            other.c * self.b + other.d * self.d,
            other.a * self.tx + other.b * self.ty + other.tx,
            other.c * self.tx + other.d * self.ty + other.ty,
        )

    def path(self, path: GridPath) -> GridPath:
        apply = self.apply
        return GridPath([apply(p.x, p.y) for p in path.points], validate=False)

    def representation(self, r: Representation) -> Representation:
        return Representation({v: self.path(p) for v, p in r.paths.items()})


IDENTITY = Affine()
ROTATE_CCW = Affine(0, -1, 1, 0)
ROTATE_CW = Affine(0, 1, -1, 0)
FLIP_HORIZONTAL = Affine(-1, 0, 0, 1)
FLIP_VERTICAL = Affine(1, 0, 0, -1)
# rotate counter clockwise then flip horizontally, keeps L shapes L shaped
TRANSPOSE = ROTATE_CCW.then(FLIP_HORIZONTAL)


def translation(dx: int, dy: int) -> Affine:
    return Affine(tx=dx, ty=dy)


class TransformOp(Enum):
    ROTATE_90_CCW = "rotate90ccw"
    ROTATE_90_CW = "rotate90cw"
    FLIP_HORIZONTAL = "flip-horizontal"
    FLIP_VERTICAL = "flip-vertical"
    TRANSPOSE = "transpose"


_OPERATIONS = {
    TransformOp.ROTATE_90_CCW: ROTATE_CCW,
    TransformOp.ROTATE_90_CW: ROTATE_CW,
    TransformOp.FLIP_HORIZONTAL: FLIP_HORIZONTAL,
    TransformOp.FLIP_VERTICAL: FLIP_VERTICAL,
    TransformOp.TRANSPOSE: TRANSPOSE,
}


@dataclass(frozen=True)
class Translate:
    dx: int
    dy: int


def normalize_bounds(r: Representation) -> Representation:
    """translate so the bounding box starts at (0, 0)"""
    minx, miny, _, _ = r.bounds
    if minx == 0 and miny == 0:
        return r
    return translation(-minx, -miny).representation(r)


def transform_representation(r: Representation, op: TransformOp | Translate) -> Representation:
    """
    point-wise image of r under op
    translations are applied as given, rotations and flips are followed by
    re-normalising the bounds to non-negative coordinates
    """
    if isinstance(op, Translate):
        return translation(op.dx, op.dy).representation(r)
    return normalize_bounds(_OPERATIONS[op].representation(r))


# rotations counter clockwise needed to turn a bent root into an L
_TURNS_TO_L = {Shape.L: 0, Shape.UL: 1, Shape.UR: 2, Shape.LR: 3}


def _truncate_at(path: GridPath, p: GridPoint, away: GridPoint) -> GridPath:
    """drop the part of path leaving p towards away, p becomes an endpoint"""
    points = path.points
    index = points.index(p)
    if index > 0 and points[index - 1] == away:
        kept = points[index:]
    else:
        kept = points[:index + 1]
    if len(kept) < 2:
        raise NormalizationError(f"truncating at {tuple(p)} leaves a path without edges")
    return GridPath(kept, validate=False)


def _leg_edges(root: GridPath, p: GridPoint) -> tuple[set, set]:
    """edges of the root on its vertical leg (above p) and on its horizontal leg (right of p)"""
    vertical, horizontal = set(), set()
    for edge in root.edges():
        (ax, ay), (bx, by) = edge
        if ax == bx == p.x and ay >= p.y:
            vertical.add(edge)
        elif ay == by == p.y and ax >= p.x:
            horizontal.add(edge)
    return vertical, horizontal


def _check_unchanged(step: str, r: Representation, expected: set) -> None:
    actual = edge_intersection_graph(r).edge_set()
    if actual != expected:
        lost = sorted(tuple(sorted(e)) for e in expected - actual)
        gained = sorted(tuple(sorted(e)) for e in actual - expected)
        raise NormalizationError(f"{step} changed the intersection graph, lost {lost}, gained {gained}")
    logger.debug("normalisation step %s keeps the intersection graph", step)


def normalize_block_representation(r: Representation, root: str,
                                   policy: ShapePolicy = ShapePolicy.B1) -> Representation:
    """
    reshape a representation of a block so its root path becomes a vertical segment

    the root is oriented as an L with bend point p (a straight root is an L with one
    empty leg), paths meeting every other path are made coincident with the root,
    paths running below or left of p are cut at p, every other path is trimmed to the
    stretch it shares with some other path, under the L-only policy the leg of an L path
    missing the root is dropped, and finally the horizontal leg of the root is unbent
    at p. the intersection graph is re-checked after every step.

    returns:
        a representation with the root on column 0 bend free, every other path weakly
        right of it, minimum y coordinate 0

    raises:
        NormalizationError when a precondition fails or a step changes the intersection graph
    """
    if root not in r.paths:
        raise NormalizationError(f"root {root} has no path")
    g = edge_intersection_graph(r)
    others = [v for v in r.paths if v != root]
    if any(not g.has_edge(root, v) for v in others):
        raise NormalizationError(f"root {root} is not universal in the block representation")
    for vertex, path in r.paths.items():
        if not shape_allowed(analyze_path(path), policy):
            raise NormalizationError(f"path of {vertex} violates the {policy.value} policy")
    expected = g.edge_set()

    # orient the root as an L
    analysis = analyze_path(r.paths[root])
    if analysis.bend_count > 1:
        raise NormalizationError(f"root path of {root} has {analysis.bend_count} bends")
    if analysis.shape in _TURNS_TO_L:
        turn = IDENTITY
        for _ in range(_TURNS_TO_L[analysis.shape]):
            turn = turn.then(ROTATE_CCW)
        paths = dict(turn.representation(r).paths)
        p = analyze_path(paths[root]).bend_points[0]
    else:
        paths = dict(r.paths)
        points = paths[root].points
        # bottom endpoint of a vertical root, left endpoint of a horizontal one
        p = min(points[0], points[-1], key=lambda q: (q.y, q.x) if analysis.shape is Shape.V else (q.x, q.y))

    # coincide paths meeting every other path with the root
    root_path = paths[root]
    for vertex in others:
        if g.degree(vertex) == len(others) and paths[vertex] != root_path:
            paths[vertex] = root_path
    _check_unchanged("coincide", Representation(paths), expected)

    # cut at p whatever leaves it downwards, then leftwards
    for away in (GridPoint(p.x, p.y - 1), GridPoint(p.x - 1, p.y)):
        for vertex in others:
            points = paths[vertex].points
            if p in points and away in points:
                i, j = points.index(p), points.index(away)
                if abs(i - j) == 1:
                    paths[vertex] = _truncate_at(paths[vertex], p, away)
        _check_unchanged("truncate", Representation(paths), expected)

    # drop the ends of every path that no other path uses
    owners = edge_owners(Representation(paths))
    for vertex in others:
        paths[vertex] = _trim_to_shared(paths[vertex], owners)
    _check_unchanged("trim", Representation(paths), expected)

    vertical_leg, horizontal_leg = _leg_edges(root_path, p)

    if policy is ShapePolicy.L_ONLY:
        for vertex in others:
            path = paths[vertex]
            if analyze_path(path).bend_count != 1:
                continue
            edges = set(path.edges())
            on_vertical, on_horizontal = bool(edges & vertical_leg), bool(edges & horizontal_leg)
            if on_vertical != on_horizontal:
                bend = analyze_path(path).bend_points[0]
                paths[vertex] = _keep_leg(path, bend, vertical=on_vertical)
        _check_unchanged("degenerate", Representation(paths), expected)

    paths = _unbend(paths, root, p, vertical_leg, horizontal_leg)
    result = Representation(paths)
    _check_unchanged("unbend", result, expected)

    column = paths[root].points[0].x
    _, miny, _, _ = result.bounds
    result = translation(-column, -miny).representation(result)
    for vertex, path in result.paths.items():
        if not shape_allowed(analyze_path(path), policy):
            raise NormalizationError(f"path of {vertex} violates the {policy.value} policy after unbending")
    return result


def _trim_to_shared(path: GridPath, owners: dict) -> GridPath:
    """shortest sub-path still holding every edge of path that another path also uses"""
    shared = [i for i, edge in enumerate(path.edges()) if len(owners[edge]) > 1]
    if not shared or (shared[0] == 0 and shared[-1] == len(path.points) - 2):
        return path
    return GridPath(path.points[shared[0]:shared[-1] + 2], validate=False)


def _sharing_groups(vertices: list[str], paths: dict[str, GridPath], column: int) -> list[list[str]]:
    """vertices linked by grid edges off the given column that their paths have in common"""
    owners: dict = {}
    for vertex in vertices:
        for edge in paths[vertex].edges():
            if edge[0][0] != column or edge[1][0] != column:
                owners.setdefault(edge, []).append(vertex)
    links = {tuple(sorted((u, w))) for sharing in owners.values() for u in sharing for w in sharing if u < w}
    return Graph(vertices, sorted(links)).connected_components()


def _keep_leg(path: GridPath, bend: GridPoint, vertical: bool) -> GridPath:
    """the vertical (or horizontal) leg of a single bend path"""
    points = path.points
    index = points.index(bend)
    first, second = points[:index + 1], points[index:]
    first_vertical = first[0].x == bend.x
    leg = first if first_vertical == vertical else second
    return GridPath(leg, validate=False)


def _unbend(paths: dict[str, GridPath], root: str, p: GridPoint,
            vertical_leg: set, horizontal_leg: set) -> dict[str, GridPath]:
    """
    turn the horizontal leg of the root into the downward continuation of its vertical leg

    paths meeting only the horizontal leg are rotated clockwise about p, paths meeting
    both legs are straightened, then every group of paths sharing edges off the root
    column is mirrored about it when that puts the group on the right
    """
    def rotate(q: GridPoint) -> GridPoint:
        return GridPoint(p.x + (q.y - p.y), p.y - (q.x - p.x))

    horizontal_sector, vertical_sector, straightened = [], [], []
    for vertex, path in paths.items():
        edges = set(path.edges())
        on_vertical, on_horizontal = bool(edges & vertical_leg), bool(edges & horizontal_leg)
        if vertex == root or (on_vertical and on_horizontal):
            straightened.append(vertex)
        elif on_horizontal:
            horizontal_sector.append(vertex)
        else:
            vertical_sector.append(vertex)

    result = dict(paths)
    for vertex in straightened:
        result[vertex] = GridPath(
            [rotate(q) if q.y == p.y and q.x > p.x else q for q in paths[vertex].points], validate=False)
    for vertex in horizontal_sector:
        result[vertex] = GridPath([rotate(q) for q in paths[vertex].points], validate=False)

    for group in _sharing_groups(horizontal_sector + vertical_sector, result, p.x):
        xs = [q.x for v in group for q in result[v].points]
        if min(xs) >= p.x:
            continue
        if max(xs) > p.x:
            raise NormalizationError("block representation has paths on both sides of the root after unbending")
        for vertex in group:
            result[vertex] = GridPath([GridPoint(2 * p.x - q.x, q.y) for q in result[vertex].points], validate=False)
    return result


