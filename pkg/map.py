from __future__ import annotations

from config import ASCII_EMPTY, ASCII_SHARED, ASCII_SYMBOLS
from path import Representation
from utils import Tile


class GridMap:
    """
    raster of the lattice points inside the bounding box of a representation
    every tile records the indices of the paths visiting its point
    """

    def __init__(self, rep: Representation) -> None:
        """
        args:
            rep: representation to rasterise, an empty one gives an empty map
        """
        self.labels = list(rep.paths)
        self.minx, self.miny, maxx, maxy = rep.bounds
        if not self.labels:
            self.map: list[list[Tile]] = []
            return
        self.map = [[Tile() for _ in range(maxx - self.minx + 1)] for _ in range(maxy - self.miny + 1)]
        for index, path in enumerate(rep.paths.values()):
            for point in path.points:
                self.get_tile(point.x - self.minx, point.y - self.miny).owners.append(index)

    def get_tile(self, x: int, y: int) -> Tile | None:
        """
        tile at raster coordinates, row 0 is the lowest grid row
        returns none if coordinates are out of bounds
        """
        return self.map[y][x] if 0 <= y < len(self.map) and 0 <= x < len(self.map[0]) else None

    @staticmethod
    def symbol(index: int) -> str:
        return ASCII_SYMBOLS[index % len(ASCII_SYMBOLS)]

    def tile_symbol(self, tile: Tile) -> str:
        if not tile.owners:
            return ASCII_EMPTY
        if len(tile.owners) > 1:
            return ASCII_SHARED
        return self.symbol(tile.owners[0])

    def draw(self) -> str:
        """text raster, top grid row first, followed by a symbol legend"""
        if not self.map:
            return ""
        lines = ["".join(self.tile_symbol(tile) for tile in row) for row in reversed(self.map)]
        lines.append("")
        lines += [f"{self.symbol(index)} {label}" for index, label in enumerate(self.labels)]
        lines.append(f"{ASCII_SHARED} shared point")
        return "\n".join(lines) + "\n"
