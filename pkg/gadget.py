"""
per-block gadget library

a gadget lays out the non-root vertices of one block inside a horizontal band
whose rows [0, height] run along the root column x = 0. the root path itself is
the column segment of the band and is drawn by the caller. every cut vertex
child of the block gets an attachment ray, a straight piece of its path no other
gadget path uses, next to an empty region sized by the budget of its subtree.

subtree frames: the root path is column 0 rows [0, height], every other path of
the subtree lies in rows [0, height] and columns [-left, right]
"""
from __future__ import annotations
import logging
from dataclasses import dataclass, field

from path import Representation
from transform import ROTATE_CCW, TRANSPOSE, Affine, translation
from utils import GridPoint, HypothesisError, ShapePolicy

logger = logging.getLogger(__name__)


@dataclass
class RegionBudget:
    """extents of a subtree in its own frame, bands are the stacked child block gadgets"""
    height: int
    left: int = 0
    right: int = 0
    bands: list[BandPlacement] = field(default_factory=list)

    @property
    def width(self) -> int:
        return self.left + self.right


@dataclass(frozen=True)
class Attachment:
    vertex: str
    # maps the subtree frame of vertex into the gadget frame
    transform: Affine
    # ray endpoints in the gadget frame
    ray: tuple[GridPoint, GridPoint]


@dataclass
class Gadget:
    block_id: int
    kind: str
    # corner points of every non-root block vertex, gadget frame
    paths: dict[str, list[GridPoint]]
    height: int
    left: int = 0
    right: int = 0
    attachments: list[Attachment] = field(default_factory=list)


@dataclass(frozen=True)
class BandPlacement:
    block_id: int
    base: int
    gadget: Gadget


def ray_attachment(vertex: str, ax: int, ay: int, budget: RegionBudget, policy: ShapePolicy) -> Attachment:
    """
    attach a subtree on the horizontal ray starting at (ax, ay) and running right

    the subtree is rotated counter clockwise, under the L-only policy it is also
    flipped horizontally so its L paths stay L paths. its left extent ends up
    below the ray and its right extent above.
    """
    if policy is ShapePolicy.L_ONLY:
        transform = TRANSPOSE.then(translation(ax, ay))
    else:
        transform = ROTATE_CCW.then(translation(ax + budget.height, ay))
    return Attachment(vertex, transform, (GridPoint(ax, ay), GridPoint(ax + budget.height, ay)))


def _below(budget: RegionBudget | None) -> int:
    return budget.left if budget else 0


def _above(budget: RegionBudget | None) -> int:
    return budget.right if budget else 0


def _ray_length(budget: RegionBudget | None) -> int:
    return budget.height if budget else 0


def gadget_clique(block_id: int, non_cut: list[str], children: list[tuple[str, RegionBudget]],
                  policy: ShapePolicy = ShapePolicy.L_ONLY, top: Representation | None = None) -> Gadget:
    """
    gadget of a block whose vertices all meet each other on the root column

    child cut vertices are L paths, their vertical legs run down the root column from
    the top of the band and their horizontal legs, the attachment rays, leave it on
    distinct rows with a blank row between the child regions. the non-cut vertices
    sit above the children, either as coincident unit segments (clique) or as a
    normalised representation of the block restricted to them.

    args:
        non_cut: non-cut vertices, ignored when top is given
        children: (cut vertex, subtree budget) in placement order, the first one lowest
        top: normalised block representation restricted to the non-cut vertices,
            root column at x = 0 and every path weakly right of it
    """
    paths: dict[str, list[GridPoint]] = {}
    attachments = []
    rows = []
    stack_top = None
    cursor = 0
    for vertex, budget in children:
        y = cursor + budget.left
        rows.append(y)
        attachments.append(ray_attachment(vertex, 1, y, budget, policy))
        stack_top = y + budget.right
        cursor = stack_top + 2

    right = max((1 + budget.height for _, budget in children), default=0)
    base = cursor
    if top is not None and len(top):
        minx, miny, maxx, maxy = top.bounds
        shift = translation(0, base - miny)
        for vertex, path in top.paths.items():
            paths[vertex] = [shift.apply(*corner) for corner in path.corners()]
        leg_top = base + maxy - miny
        right = max(right, maxx)
    elif non_cut:
        for vertex in non_cut:
            paths[vertex] = [GridPoint(0, base), GridPoint(0, base + 1)]
        leg_top = base + 1
    else:
        leg_top = rows[-1] + 1

    for (vertex, budget), y in zip(children, rows):
        paths[vertex] = [GridPoint(0, leg_top), GridPoint(0, y), GridPoint(1 + budget.height, y)]
    height = max(leg_top, stack_top if stack_top is not None else 0)
    return Gadget(block_id, "clique" if top is None else "block", paths, height, 0, right, attachments)


def gadget_cycle(block_id: int, order: list[str], budgets: dict[str, RegionBudget],
                 policy: ShapePolicy = ShapePolicy.B1) -> Gadget:
    """
    gadget of the cycle order[0], order[1], ..., order[k - 1] rooted at order[0]

    a triangle is a clique. a 4-cycle crosses the root column with its middle vertex
    and uses the left side. longer cycles run as two chains of horizontal segments,
    the first half on an upper row leaving the root column upwards, the second half
    on a lower row leaving it downwards, consecutive segments overlapping on one
    edge, the two far ends meeting on a shared column edge.

    args:
        budgets: subtree budget of every cut vertex child, absent for the others

    raises:
        HypothesisError for cycles of length 4 or more under the L-only policy
    """
    k = len(order)
    if k < 3:
        raise HypothesisError(f"block {block_id} is not a cycle", block_id=block_id)
    rest = order[1:]
    if k == 3:
        children = [(v, budgets[v]) for v in rest if v in budgets]
        return gadget_clique(block_id, [v for v in rest if v not in budgets], children, policy)
    if policy is ShapePolicy.L_ONLY:
        raise HypothesisError(f"cycle block {block_id} of length {k} has no L-only gadget", block_id=block_id)
    if k == 4:
        return _gadget_four_cycle(block_id, rest, budgets, policy)

    # the upper chain takes the larger half
    half = k // 2
    upper = [(v, budgets.get(v)) for v in rest[:half]]
    lower = [(v, budgets.get(v)) for v in reversed(rest[half:])]
    # lower row clears the left extents of the lower subtrees, upper row clears both stacks
    low_row = max(1, max(_below(b) for _, b in lower))
    high_row = low_row + max(_above(b) for _, b in lower) + max(_below(b) for _, b in upper) + 2
    height = high_row + max(1, max(_above(b) for _, b in upper))

    upper_chain = _chain(upper)
    lower_chain = _chain(lower)
    # the chains end on one shared column, the farther chain fixes it
    far = max(upper_chain[-1][1], lower_chain[-1][1])

    paths: dict[str, list[GridPoint]] = {}
    attachments = []
    for chain, members, row in ((upper_chain, upper, high_row), (lower_chain, lower, low_row)):
        last = len(chain) - 1
        for index, ((start, end), (vertex, budget)) in enumerate(zip(chain, members)):
            if index == 0:
                # first segments leave the root column, up for the upper chain and down for the lower one
                step = 1 if row == high_row else -1
                corners = [GridPoint(0, row + step), GridPoint(0, row), GridPoint(end, row)]
            elif index == last:
                # both far ends share the edge (far, low_row + 1) - (far, low_row + 2)
                turn = low_row + 1 if row == high_row else low_row + 2
                corners = [GridPoint(start, row), GridPoint(far, row), GridPoint(far, turn)]
            else:
                corners = [GridPoint(start, row), GridPoint(end, row)]
            paths[vertex] = corners
            if budget is not None:
                # ray starts one column in, clear of the edge shared with the previous segment
                attachments.append(ray_attachment(vertex, start + 1, row, budget, policy))
    logger.debug("cycle gadget for block %d, k=%d, rows %d and %d, far column %d", block_id, k, low_row, high_row, far)
    return Gadget(block_id, "cycle", paths, height, 0, far, attachments)


def _chain(members: list[tuple[str, RegionBudget | None]]) -> list[tuple[int, int]]:
    """
    (start, end) columns of consecutive segments on one row
    segment i keeps its ray on [start + 1, start + 1 + ray length] to itself and shares
    its last edge with segment i + 1
    """
    spans = []
    start = 0
    for _, budget in members:
        end = start + _ray_length(budget) + 3
        spans.append((start, end))
        start = end - 1
    return spans


def _gadget_four_cycle(block_id: int, rest: list[str], budgets: dict[str, RegionBudget],
                       policy: ShapePolicy) -> Gadget:
    """
    root r, then a, b, c around the cycle. a leaves the root column up then right, c
    leaves it down then left, both on row R. b is a horizontal segment crossing the
    root column on row R, meeting a and c on one edge each; with a subtree it turns
    up on the left and carries its ray on that vertical leg.
    """
    a, b, c = rest
    budget_a, budget_b, budget_c = budgets.get(a), budgets.get(b), budgets.get(c)
    # row R sits above the lower extents of the subtrees of a and c
    row = max(1, _below(budget_a), _below(budget_c))
    paths: dict[str, list[GridPoint]] = {}
    attachments = []
    height = row + max(1, _above(budget_a), _above(budget_c))

    # room for the ray of a plus the edge shared with b
    a_end = _ray_length(budget_a) + 3
    paths[a] = [GridPoint(0, row + 1), GridPoint(0, row), GridPoint(a_end, row)]
    if budget_a is not None:
        attachments.append(ray_attachment(a, 1, row, budget_a, policy))

    if budget_b is None:
        b_column, b_left = 1, 0
        paths[b] = [GridPoint(-1, row), GridPoint(1, row)]
    else:
        # the subtree of b is upright left of the root column, its right extent towards the root
        b_column, b_left = budget_b.right + 2, budget_b.left
        paths[b] = [GridPoint(-b_column, row + 1 + budget_b.height), GridPoint(-b_column, row), GridPoint(1, row)]
        # no rotation, the ray of b is already vertical
        transform = translation(-b_column, row + 1)
        ray = (GridPoint(-b_column, row + 1), GridPoint(-b_column, row + 1 + budget_b.height))
        attachments.append(Attachment(b, transform, ray))
        height = max(height, row + 1 + budget_b.height)

    # c runs left past the subtree of b before its own ray
    reach = b_column + b_left + 3 + _ray_length(budget_c)
    paths[c] = [GridPoint(0, row - 1), GridPoint(0, row), GridPoint(-reach, row)]
    if budget_c is not None:
        attachments.append(ray_attachment(c, -reach, row, budget_c, policy))
    return Gadget(block_id, "cycle", paths, height, reach, a_end, attachments)
