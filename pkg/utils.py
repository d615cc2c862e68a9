from __future__ import annotations
from enum import Enum
from dataclasses import dataclass, field
from typing import NamedTuple

from config import (
    EXIT_VERIFY_FAILED,
    EXIT_PARSE_ERROR,
    EXIT_HYPOTHESIS,
    EXIT_MISMATCH,
)


class Direction(Enum):
    """unit step directions on the grid, value is the (dx, dy) offset"""
    NORTH = (0, 1)
    SOUTH = (0, -1)
    WEST = (-1, 0)
    EAST = (1, 0)

    @property
    def horizontal(self) -> bool:
        return self in (Direction.WEST, Direction.EAST)


class Shape(Enum):
    """
    shape class of a grid path
    the four single bend shapes are named after the corner where the bend sits:
    L = legs up and right, UL = legs down and right, LR = legs up and left, UR = legs down and left
    """
    H = "H"
    V = "V"
    L = "L"
    UL = "UL"
    LR = "LR"
    UR = "UR"
    MULTI_BEND = "MultiBend"


# leg directions leaving the bend point -> shape
BEND_SHAPES = {
    frozenset((Direction.NORTH, Direction.EAST)): Shape.L,
    frozenset((Direction.SOUTH, Direction.EAST)): Shape.UL,
    frozenset((Direction.NORTH, Direction.WEST)): Shape.LR,
    frozenset((Direction.SOUTH, Direction.WEST)): Shape.UR,
}


class ShapePolicy(Enum):
    """which paths a representation may contain"""
    B1 = "b1"
    L_ONLY = "l-only"
    ANY = "any"


class Mode(Enum):
    """construction mode, picks which construction builds the representation"""
    AUTO = "auto"
    CACTUS = "cactus"
    BLOCK_GRAPH = "block-graph"
    GENERAL_B1 = "general-B1"
    GENERAL_L = "general-L"

    @property
    def policy(self) -> ShapePolicy:
        if self in (Mode.BLOCK_GRAPH, Mode.GENERAL_L):
            return ShapePolicy.L_ONLY
        return ShapePolicy.B1


class BlockType(Enum):
    EDGE = "Edge"
    CYCLE = "Cycle"
    CLIQUE = "Clique"
    OTHER = "Other"


@dataclass(frozen=True)
class BlockKind:
    """
    classification of a block
    size is k for cycles and n for cliques, a triangle is a Cycle(3) with is_clique set
    """
    type: BlockType
    size: int = 2
    is_clique: bool = False

    def __str__(self) -> str:
        if self.type in (BlockType.CYCLE, BlockType.CLIQUE):
            return f"{self.type.value}({self.size})"
        return self.type.value


class GridPoint(NamedTuple):
    x: int
    y: int


# exceptions, every error knows the cli exit status it maps to

class GridPathsError(RuntimeError):
    exit_code = 1


class GraphParseError(GridPathsError):
    exit_code = EXIT_PARSE_ERROR

    def __init__(self, line_number: int, message: str) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class GraphValidationError(GridPathsError):
    exit_code = EXIT_PARSE_ERROR

    def __init__(self, message: str, edge: tuple[str, str] | None = None) -> None:
        super().__init__(message)
        self.edge = edge


class DisconnectedGraphError(GridPathsError):
    exit_code = EXIT_PARSE_ERROR


class SingleBlockError(GridPathsError):
    """raised when a rooted bc-tree is requested for a graph without cut vertex"""
    exit_code = EXIT_HYPOTHESIS


class PathStructureError(GridPathsError):
    exit_code = EXIT_PARSE_ERROR

    def __init__(self, index: int, message: str) -> None:
        super().__init__(f"point {index}: {message}")
        self.index = index


class VertexMismatchError(GridPathsError):
    exit_code = EXIT_MISMATCH

    def __init__(self, missing: list[str], extra: list[str]) -> None:
        super().__init__(f"vertex sets differ, missing paths for {missing}, unknown paths {extra}")
        self.missing = missing
        self.extra = extra


class HypothesisError(GridPathsError):
    exit_code = EXIT_HYPOTHESIS

    def __init__(self, message: str, cut_vertex: str | None = None, block_id: int | None = None) -> None:
        super().__init__(message)
        self.cut_vertex = cut_vertex
        self.block_id = block_id


class MissingBlockRepresentationError(HypothesisError):
    def __init__(self, block_id: int) -> None:
        super().__init__(f"no representation supplied for block {block_id}", block_id=block_id)


class NormalizationError(GridPathsError):
    exit_code = EXIT_VERIFY_FAILED


@dataclass
class Tile:
    """one lattice point of a raster, indices of the paths visiting it"""
    owners: list[int] = field(default_factory=list)
