from __future__ import annotations
import logging
import os
from html import escape

# headless drawing, no window and no import banner on stdout
os.environ.setdefault("SDL_VIDEODRIVER", "dummy")
os.environ.setdefault("PYGAME_HIDE_SUPPORT_PROMPT", "1")
import pygame as pg

from camera import Camera
from config import (
    BACKGROUND_COLOR,
    CELL_SIZE,
    COINCIDENT_OFFSET,
    GRID_COLOR,
    LABEL_FONT_SIZE,
    PALETTE,
    STROKE_WIDTH,
)
from map import GridMap
from path import Representation, edge_owners

logger = logging.getLogger(__name__)

FORMATS = ("svg", "ascii", "png")


def path_offsets(rep: Representation) -> dict[str, float]:
    """
    sub-cell drawing offset of every path
    a path is shifted by its highest rank among the owners of its grid edges, so paths
    sharing edges are drawn side by side; stored coordinates are never touched
    """
    rank: dict[str, int] = dict.fromkeys(rep.paths, 0)
    for owners in edge_owners(rep).values():
        for position, vertex in enumerate(owners):
            rank[vertex] = max(rank[vertex], position)
    return {vertex: r * COINCIDENT_OFFSET for vertex, r in rank.items()}


class Renderer:
    """
    draws a representation as a figure: one polyline per path on a light grid,
    colours cycled from the palette, the vertex label at the start of its path
    """

    def __init__(self, rep: Representation, cell_size: int = CELL_SIZE) -> None:
        self.rep = rep
        self.camera = Camera(rep.bounds, cell_size)
        self.offsets = path_offsets(rep)

    def color(self, index: int) -> str:
        return PALETTE[index % len(PALETTE)]

    def polyline(self, vertex: str) -> list[tuple[int, int]]:
        """pixel corners of a path, shifted by its offset"""
        shift = self.offsets[vertex]
        return [self.camera.apply((p.x + shift, p.y + shift)) for p in self.rep[vertex].corners()]

    def grid_lines(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """pixel endpoints of every grid line through the bounding box"""
        c = self.camera
        lines = []
        for x in range(c.minx, c.maxx + 1):
            lines.append((c.apply((x, c.miny)), c.apply((x, c.maxy))))
        for y in range(c.miny, c.maxy + 1):
            lines.append((c.apply((c.minx, y)), c.apply((c.maxx, y))))
        return lines if len(self.rep) else []

    def to_svg(self) -> str:
        width, height = self.camera.width, self.camera.height
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
            f'  <rect x="0" y="0" width="{width}" height="{height}" fill="{BACKGROUND_COLOR}"/>',
        ]
        for (x1, y1), (x2, y2) in self.grid_lines():
            out.append(f'  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{GRID_COLOR}" stroke-width="1"/>')
        for index, vertex in enumerate(self.rep.paths):
            color = self.color(index)
            points = self.polyline(vertex)
            coordinates = " ".join(f"{x},{y}" for x, y in points)
            out.append(f'  <polyline points="{coordinates}" fill="none" stroke="{color}" '
                       f'stroke-width="{STROKE_WIDTH}" stroke-linecap="round"/>')
            x, y = points[0]
            out.append(f'  <text x="{x + 3}" y="{y - 3}" font-family="monospace" '
                       f'font-size="{LABEL_FONT_SIZE}" fill="{color}">{escape(vertex)}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"

    def to_ascii(self) -> str:
        return GridMap(self.rep).draw()

    def to_png(self, filename: str) -> None:
        """
        raster the figure with pygame and save it

        raises:
            RuntimeError when pygame cannot draw or save the image
        """
        try:
            pg.font.init()
            surface = pg.Surface((max(1, self.camera.width), max(1, self.camera.height)))
            surface.fill(pg.Color(BACKGROUND_COLOR))
            for start, end in self.grid_lines():
                pg.draw.line(surface, pg.Color(GRID_COLOR), start, end, 1)
            font = pg.font.Font(None, LABEL_FONT_SIZE + 6)
            for index, vertex in enumerate(self.rep.paths):
                color = pg.Color(self.color(index))
                points = self.polyline(vertex)
                pg.draw.lines(surface, color, False, points, STROKE_WIDTH)
                label = font.render(vertex, True, color)
                surface.blit(label, (points[0][0] + 3, points[0][1] - label.get_height()))
            pg.image.save(surface, filename)
        except pg.error as e:
            raise RuntimeError(f"failed to write png {filename}: {e}")
        logger.debug("wrote %dx%d png to %s", surface.get_width(), surface.get_height(), filename)


def render_text(rep: Representation, fmt: str) -> str:
    """svg or ascii figure as text"""
    renderer = Renderer(rep)
    if fmt == "svg":
        return renderer.to_svg()
    if fmt == "ascii":
        return renderer.to_ascii()
    raise ValueError(f"{fmt} is not a text format")
