"""
grid paths and edge intersection representations

a path lists every lattice point it visits, two paths are adjacent in the
intersection graph when they traverse a common unit grid edge (touching or
crossing at a point does not count)
"""
from __future__ import annotations
import json
import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from graph import Graph
from utils import (
    BEND_SHAPES,
    Direction,
    GridPoint,
    PathStructureError,
    Shape,
    ShapePolicy,
    VertexMismatchError,
)

logger = logging.getLogger(__name__)

# a unit grid edge, endpoints in lexicographic order
GridEdge = tuple[tuple[int, int], tuple[int, int]]


class GridPath:
    """
    simple lattice path of at least one unit edge
    immutable, equality and hashing follow the point sequence
    """

    __slots__ = ("points",)

    def __init__(self, points: Iterable, validate: bool = True) -> None:
        self.points: tuple[GridPoint, ...] = tuple(GridPoint(int(p[0]), int(p[1])) for p in points)
        if validate:
            check_path(self.points)

    @classmethod
    def from_corners(cls, corners: Iterable, validate: bool = True) -> GridPath:
        """
        expand a polyline of axis parallel corner points into every lattice point

        raises:
            PathStructureError when two consecutive corners are not axis aligned
        """
        corners = [GridPoint(int(c[0]), int(c[1])) for c in corners]
        points = [corners[0]]
        for index, (a, b) in enumerate(zip(corners, corners[1:]), start=1):
            if a.x != b.x and a.y != b.y:
                raise PathStructureError(index, f"corners {tuple(a)} and {tuple(b)} are not axis aligned")
            dx = (b.x > a.x) - (b.x < a.x)
            dy = (b.y > a.y) - (b.y < a.y)
            steps = abs(b.x - a.x) + abs(b.y - a.y)
            points.extend(GridPoint(a.x + dx * i, a.y + dy * i) for i in range(1, steps + 1))
        return cls(points, validate=validate)

    def __len__(self) -> int:
        """number of unit edges"""
        return len(self.points) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GridPath):
            return NotImplemented
        return self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"GridPath({[tuple(c) for c in self.corners()]})"

    def edges(self) -> list[GridEdge]:
        """unit edges in traversal order, direction insensitive"""
        points = self.points
        return [(a, b) if a <= b else (b, a) for a, b in zip(points, points[1:])]

    def corners(self) -> list[GridPoint]:
        """endpoints and bend points, the compressed polyline"""
        points = self.points
        result = [points[0]]
        for previous, current, following in zip(points, points[1:], points[2:]):
            if (current.x - previous.x, current.y - previous.y) != (following.x - current.x, following.y - current.y):
                result.append(current)
        result.append(points[-1])
        return result

    def reversed(self) -> GridPath:
        return GridPath(self.points[::-1], validate=False)


def check_path(points) -> None:
    """
    structural check of a point sequence

    raises:
        PathStructureError naming the first offending index
    """
    if len(points) < 2:
        raise PathStructureError(len(points), "a path needs at least one grid edge")
    seen = {points[0]}
    for index in range(1, len(points)):
        a, b = points[index - 1], points[index]
        if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
            raise PathStructureError(index, f"{tuple(a)} -> {tuple(b)} is not a unit step")
        if b in seen:
            raise PathStructureError(index, f"point {tuple(b)} visited twice")
        seen.add(b)


@dataclass(frozen=True)
class PathAnalysis:
    bend_count: int
    shape: Shape
    bend_points: list[GridPoint]
    # only set for multi bend paths
    multi_bend: int = 0


def analyze_path(path) -> PathAnalysis:
    """
    count bends and classify the shape of a path

    args:
        path: a GridPath or a raw point sequence (validated)

    returns:
        PathAnalysis with the bend count, shape and bend points in traversal order
    """
    points = path.points if isinstance(path, GridPath) else tuple(GridPoint(*p) for p in path)
    if not isinstance(path, GridPath):
        check_path(points)
    # plain step tuples, directions are only built for the two legs
    steps = [(b[0] - a[0], b[1] - a[1]) for a, b in zip(points, points[1:])]
    bend_points = [points[i] for i in range(1, len(steps)) if steps[i] != steps[i - 1]]
    bends = len(bend_points)
    if bends == 0:
        shape = Shape.H if Direction(steps[0]).horizontal else Shape.V
    elif bends == 1:
        # legs leave the bend point, the first leg runs backwards
        first, last = steps[0], steps[-1]
        shape = BEND_SHAPES[frozenset((Direction((-first[0], -first[1])), Direction(last)))]
    else:
        shape = Shape.MULTI_BEND
    return PathAnalysis(bends, shape, bend_points, bends if bends >= 2 else 0)


def shape_allowed(analysis: PathAnalysis, policy: ShapePolicy) -> bool:
    if policy is ShapePolicy.B1:
        return analysis.bend_count <= 1
    if policy is ShapePolicy.L_ONLY:
        return analysis.shape in (Shape.H, Shape.V, Shape.L)
    return True


class Representation:
    """
    map vertex label -> GridPath, in insertion order
    bounds are recomputed from the points, the stored ones only when loaded from json
    """

    def __init__(self, paths: Mapping[str, GridPath] | None = None) -> None:
        self.paths: dict[str, GridPath] = dict(paths or {})

    def __len__(self) -> int:
        return len(self.paths)

    def __getitem__(self, vertex: str) -> GridPath:
        return self.paths[vertex]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return self.paths == other.paths

    def __repr__(self) -> str:
        return f"Representation({len(self.paths)} paths, bounds={self.bounds})"

    @property
    def bounds(self) -> tuple[int, int, int, int]:
        """(min x, min y, max x, max y), all zero for an empty representation"""
        xs = [p.x for path in self.paths.values() for p in path.points]
        ys = [p.y for path in self.paths.values() for p in path.points]
        if not xs:
            return (0, 0, 0, 0)
        return (min(xs), min(ys), max(xs), max(ys))

    @property
    def side_length(self) -> int:
        minx, miny, maxx, maxy = self.bounds
        return max(maxx - minx, maxy - miny)

    def restrict(self, vertices: Iterable[str]) -> Representation:
        keep = set(vertices)
        return Representation({v: p for v, p in self.paths.items() if v in keep})

    def analyses(self) -> dict[str, PathAnalysis]:
        return {v: analyze_path(p) for v, p in self.paths.items()}

    def max_bends(self) -> int:
        return max((a.bend_count for a in self.analyses().values()), default=0)

    def shape_census(self) -> dict[str, int]:
        census: dict[str, int] = {}
        for analysis in self.analyses().values():
            census[analysis.shape.value] = census.get(analysis.shape.value, 0) + 1
        return dict(sorted(census.items()))

    def to_json(self) -> str:
        """
        json document {"paths": {...}, "bounds": [...]}
        one path per line so diffs stay readable, output is stable for identical input
        """
        lines = ["{", '  "paths": {']
        items = list(self.paths.items())
        for index, (vertex, path) in enumerate(items):
            coordinates = ", ".join(f"[{p.x}, {p.y}]" for p in path.points)
            comma = "," if index < len(items) - 1 else ""
            lines.append(f"    {json.dumps(vertex)}: [{coordinates}]{comma}")
        lines.append("  },")
        lines.append(f'  "bounds": [{", ".join(str(b) for b in self.bounds)}]')
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Representation:
        """
        parse the representation json, stored bounds must contain every point

        raises:
            PathStructureError when a path is malformed, has a coordinate that is not an integer
                or lies outside the stored bounds
        """
        data = json.loads(text)
        if not isinstance(data, dict) or not isinstance(data.get("paths"), dict):
            raise PathStructureError(0, "expected an object with a \"paths\" mapping")
        paths = {str(vertex): GridPath(_json_points(points)) for vertex, points in data["paths"].items()}
        representation = cls(paths)
        if "bounds" in data and paths:
            minx, miny, maxx, maxy = data["bounds"]
            ax, ay, bx, by = representation.bounds
            if ax < minx or ay < miny or bx > maxx or by > maxy:
                raise PathStructureError(0, f"stored bounds {data['bounds']} do not contain every path")
        return representation


def _json_points(points) -> list[tuple[int, int]]:
    """
    coordinates of a stored path, integers only

    raises:
        PathStructureError naming the first entry that is not a pair of integers
    """
    if not isinstance(points, list):
        raise PathStructureError(0, "a path is stored as a list of points")
    for index, point in enumerate(points):
        if not (isinstance(point, list) and len(point) == 2
                and all(isinstance(c, int) and not isinstance(c, bool) for c in point)):
            raise PathStructureError(index, f"point {point!r} is not a pair of integers")
    return [(x, y) for x, y in points]


def read_representation(path) -> Representation:
    with open(path, encoding="utf-8") as handle:
        return Representation.from_json(handle.read())


def edge_owners(r: Representation) -> dict[GridEdge, list[str]]:
    """grid edge -> vertices whose path uses it, in representation order"""
    owners: dict[GridEdge, list[str]] = {}
    for vertex, path in r.paths.items():
        for edge in path.edges():
            owners.setdefault(edge, []).append(vertex)
    return owners


def edge_intersection_graph(r: Representation) -> Graph:
    """
    the graph on the path labels with an edge for every pair sharing a grid edge
    edges are emitted ordered by the representation order of their endpoints
    """
    position = {v: i for i, v in enumerate(r.paths)}
    pairs: set[tuple[int, int]] = set()
    for owners in edge_owners(r).values():
        if len(owners) < 2:
            continue
        indices = [position[v] for v in owners]
        for i, a in enumerate(indices):
            for b in indices[i + 1:]:
                pairs.add((a, b) if a < b else (b, a))
    labels = list(r.paths)
    return Graph(labels, [(labels[a], labels[b]) for a, b in sorted(pairs)])


@dataclass
class VerificationReport:
    policy: ShapePolicy
    missing_edges: list[tuple[str, str]] = field(default_factory=list)
    extra_edges: list[tuple[str, str]] = field(default_factory=list)
    bends: dict[str, int] = field(default_factory=dict)
    shape_violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def edges_match(self) -> bool:
        return not self.missing_edges and not self.extra_edges

    @property
    def max_bends(self) -> int:
        return max(self.bends.values(), default=0)

    @property
    def passed(self) -> bool:
        return self.edges_match and not self.shape_violations

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "policy": self.policy.value,
            "missing_edges": [list(e) for e in self.missing_edges],
            "extra_edges": [list(e) for e in self.extra_edges],
            "max_bends": self.max_bends,
            "shape_violations": [list(v) for v in self.shape_violations],
        }

    def summary(self) -> str:
        lines = [f"verification {'passed' if self.passed else 'FAILED'} (policy {self.policy.value})"]
        lines.append(f"max bends: {self.max_bends}")
        for u, v in self.missing_edges:
            lines.append(f"missing edge: {u} {v}")
        for u, v in self.extra_edges:
            lines.append(f"extra edge: {u} {v}")
        for vertex, shape in self.shape_violations:
            lines.append(f"shape violation: {vertex} has shape {shape}")
        return "\n".join(lines)


def verify_representation(r: Representation, g: Graph, policy: ShapePolicy = ShapePolicy.B1) -> VerificationReport:
    """
    certify that r represents g under the shape policy

    returns:
        VerificationReport with the edge set symmetric difference, bends per path and shape violations

    raises:
        VertexMismatchError when the path labels and the vertices of g differ
    """
    missing = [v for v in g.vertices if v not in r.paths]
    extra = [v for v in r.paths if v not in g]
    if missing or extra:
        raise VertexMismatchError(missing, extra)

    expected = g.edge_set()
    found = edge_intersection_graph(r)
    actual = found.edge_set()
    report = VerificationReport(policy)
    report.missing_edges = [(u, v) for u, v in g.edges if frozenset((u, v)) not in actual]
    report.extra_edges = [(u, v) for u, v in found.edges if frozenset((u, v)) not in expected]
    for vertex, analysis in r.analyses().items():
        report.bends[vertex] = analysis.bend_count
        if not shape_allowed(analysis, policy):
            report.shape_violations.append((vertex, analysis.shape.value))
    logger.debug("verified %d paths: %s", len(r), "pass" if report.passed else "fail")
    return report
