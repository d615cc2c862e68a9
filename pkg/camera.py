from __future__ import annotations

from config import CELL_SIZE, MARGIN


class Camera:
    """
    view transform from grid coordinates to canvas pixels
    the grid y axis points up, the canvas y axis points down
    """
    def __init__(self, bounds: tuple[int, int, int, int], cell_size: int = CELL_SIZE, margin: int = MARGIN) -> None:
        self.minx, self.miny, self.maxx, self.maxy = bounds
        self.cell_size = cell_size
        self.margin = margin  # in cells

    @property
    def width(self) -> int:
        return (self.maxx - self.minx + 2 * self.margin) * self.cell_size

    @property
    def height(self) -> int:
        return (self.maxy - self.miny + 2 * self.margin) * self.cell_size

    def apply(self, pos) -> tuple[int, int]:
        """
        pixel position of a grid position, fractional grid positions are allowed
        rounds at render time so identical input gives identical output
        """
        x = (pos[0] - self.minx + self.margin) * self.cell_size
        y = (self.maxy - pos[1] + self.margin) * self.cell_size
        return round(x), round(y)
