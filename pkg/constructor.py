"""
recursive block-cutpoint tree composition

the layout runs in two passes. allocate_regions walks the rooted tree bottom up and
sizes every subtree: the child blocks of a cut vertex are gadgets stacked along
its column with a blank row between them. construct_bc_recursive then walks top
down composing one integer affine frame per cut vertex and emits the paths.
"""
from __future__ import annotations
import logging
from collections import deque
from typing import Mapping

from blocks import Block, BCTree, Classification, biconnected_components, build_bc_tree, classify_instance
from config import SEPARATOR
from gadget import BandPlacement, Gadget, RegionBudget, gadget_clique, gadget_cycle
from graph import Graph
from path import GridPath, Representation, verify_representation
from transform import IDENTITY, Affine, normalize_block_representation, normalize_bounds, translation
from utils import (
    BlockType,
    GridPoint,
    HypothesisError,
    MissingBlockRepresentationError,
    Mode,
    ShapePolicy,
)

logger = logging.getLogger(__name__)

BlockReps = Mapping[int, Representation]


def _uses_cycle_gadget(block: Block, policy: ShapePolicy) -> bool:
    return block.kind.type is BlockType.CYCLE and block.kind.size >= 4 and policy is not ShapePolicy.L_ONLY


def _uses_clique_gadget(block: Block) -> bool:
    return block.kind.is_clique or block.kind.type in (BlockType.EDGE, BlockType.CLIQUE)


def supplied_block_representation(block: Block, policy: ShapePolicy, block_reps: BlockReps | None) -> Representation:
    """
    the user representation of a block, checked against the block

    raises:
        MissingBlockRepresentationError when none is supplied
        HypothesisError when it does not represent the block under the policy
    """
    if not block_reps or block.id not in block_reps:
        raise MissingBlockRepresentationError(block.id)
    rep = block_reps[block.id]
    report = verify_representation(rep, Graph(block.vertices, block.edges), policy)
    if not report.passed:
        raise HypothesisError(
            f"supplied representation of block {block.id} does not represent it: {report.summary()}",
            block_id=block.id)
    return rep


def block_gadget(block: Block, root: str, children: list[tuple[str, RegionBudget]],
                 policy: ShapePolicy, block_reps: BlockReps | None = None) -> Gadget:
    """pick the gadget for a child block of root"""
    non_cut = [v for v in block.vertices if v != root and v not in dict(children)]
    if _uses_clique_gadget(block):
        return gadget_clique(block.id, non_cut, children, policy)
    if _uses_cycle_gadget(block, policy):
        return gadget_cycle(block.id, block.cycle_order(root), dict(children), policy)
    rep = supplied_block_representation(block, policy, block_reps)
    normalized = normalize_block_representation(rep, root, policy)
    logger.debug("normalised supplied representation of block %d at root %s", block.id, root)
    return gadget_clique(block.id, non_cut, children, policy, top=normalized.restrict(non_cut))


def _cut_order(bc: BCTree) -> list[str]:
    """cut vertices in breadth first order from the root"""
    order = []
    queue = deque([bc.root])
    while queue:
        cut = queue.popleft()
        order.append(cut)
        for block_id in bc.block_children[cut]:
            queue.extend(bc.cut_children[block_id])
    return order


def allocate_regions(bc: BCTree, blocks: list[Block], policy: ShapePolicy = ShapePolicy.L_ONLY,
                     block_reps: BlockReps | None = None) -> dict[str, RegionBudget]:
    """
    size every subtree of a rooted block-cutpoint tree, bottom up

    returns:
        cut vertex -> RegionBudget in the frame of that cut vertex, with the bands
        of its child blocks
    """
    budgets: dict[str, RegionBudget] = {}
    for cut in reversed(_cut_order(bc)):
        bands = []
        base = top = left = right = 0
        for block_id in bc.block_children[cut]:
            children = [(d, budgets[d]) for d in bc.cut_children[block_id]]
            gadget = block_gadget(blocks[block_id], cut, children, policy, block_reps)
            bands.append(BandPlacement(block_id, base, gadget))
            top = base + gadget.height
            left, right = max(left, gadget.left), max(right, gadget.right)
            base = top + 1 + SEPARATOR
        budgets[cut] = RegionBudget(top, left, right, bands)
    root = budgets[bc.root]
    logger.debug("root %s budget: height %d, left %d, right %d", bc.root, root.height, root.left, root.right)
    return budgets


def construct_bc_recursive(g: Graph, bc: BCTree, policy: ShapePolicy = ShapePolicy.L_ONLY,
                           block_reps: BlockReps | None = None,
                           blocks: list[Block] | None = None) -> Representation:
    """
    representation of a connected graph with cut vertices, in the frame of the root

    the root path is the bend free vertical segment on column 0, each child subtree is
    rotated onto the attachment ray of its cut vertex (and flipped under L-only)
    """
    if blocks is None:
        blocks, _ = biconnected_components(g)
    budgets = allocate_regions(bc, blocks, policy, block_reps)
    corners: dict[str, list[GridPoint]] = {bc.root: [GridPoint(0, 0), GridPoint(0, budgets[bc.root].height)]}
    frames: list[tuple[str, Affine]] = [(bc.root, IDENTITY)]
    while frames:
        cut, frame = frames.pop()
        for band in budgets[cut].bands:
            local = translation(0, band.base).then(frame)
            for vertex, points in band.gadget.paths.items():
                corners[vertex] = [local.apply(x, y) for x, y in points]
            for attachment in band.gadget.attachments:
                frames.append((attachment.vertex, attachment.transform.then(local)))
    return Representation({v: GridPath.from_corners(corners[v], validate=False) for v in g.vertices})


def _single_block(block: Block, policy: ShapePolicy, block_reps: BlockReps | None) -> Representation:
    """graphs without cut vertex, laid out directly"""
    if block.kind.type is BlockType.EDGE:
        segment = GridPath.from_corners([(0, 0), (1, 0)])
        return Representation({v: segment for v in block.vertices})
    root = block.vertices[0]
    if _uses_clique_gadget(block):
        gadget = gadget_clique(block.id, list(block.vertices[1:]), [], policy)
    elif _uses_cycle_gadget(block, policy):
        gadget = gadget_cycle(block.id, block.cycle_order(root), {}, policy)
    else:
        rep = supplied_block_representation(block, policy, block_reps)
        return normalize_bounds(Representation({v: rep[v] for v in block.vertices}))
    corners = dict(gadget.paths)
    corners[root] = [GridPoint(0, 0), GridPoint(0, gadget.height)]
    rep = Representation({v: GridPath.from_corners(corners[v]) for v in block.vertices})
    return normalize_bounds(rep)


def _offending_block(blocks: list[Block], cuts: set[str], accept) -> HypothesisError:
    for block in blocks:
        if not accept(block):
            cut = next((v for v in block.vertices if v in cuts), None)
            return HypothesisError(f"block {block.id} is {block.kind}" + (f", at cut vertex {cut}" if cut else ""),
                                   cut_vertex=cut, block_id=block.id)
    return HypothesisError("graph does not satisfy the hypotheses of the construction")


def resolve_mode(mode: Mode, classification: Classification, blocks: list[Block], cuts: set[str],
                 block_reps: BlockReps | None = None) -> Mode:
    """
    check the hypotheses of mode, auto picks block-graph, then cactus, then general

    raises:
        HypothesisError naming the offending cut vertex and block
    """
    if mode is Mode.AUTO:
        if classification.is_block_graph:
            return Mode.BLOCK_GRAPH
        if classification.is_cactus:
            return Mode.CACTUS
        mode = Mode.GENERAL_B1
    if mode is Mode.BLOCK_GRAPH and not classification.is_block_graph:
        raise _offending_block(blocks, cuts, lambda b: b.kind.is_clique)
    if mode is Mode.CACTUS and not classification.is_cactus:
        raise _offending_block(blocks, cuts, lambda b: b.kind.type in (BlockType.EDGE, BlockType.CYCLE))
    if mode in (Mode.GENERAL_B1, Mode.GENERAL_L) and classification.violations:
        cut, block_id = classification.violations[0]
        raise HypothesisError(f"cut vertex {cut} is not universal in block {block_id}",
                              cut_vertex=cut, block_id=block_id)
    return mode


def resolved_policy(g: Graph, mode: Mode) -> ShapePolicy:
    """
    shape policy the output of construct(g, mode) satisfies
    auto gives L-only when every component is a block graph, B1 otherwise
    """
    if mode is not Mode.AUTO:
        return mode.policy
    for component in g.connected_components():
        if len(component) < 2:
            continue
        part = g.subgraph(component)
        blocks, cuts = biconnected_components(part)
        if not classify_instance(part, blocks, cuts).is_block_graph:
            return ShapePolicy.B1
    return ShapePolicy.L_ONLY


def place_side_by_side(reps: list[Representation], gap: int = SEPARATOR) -> Representation:
    """union of representations laid left to right with gap blank columns between them"""
    paths: dict[str, GridPath] = {}
    offset = 0
    for rep in reps:
        if not len(rep):
            continue
        minx, miny, maxx, _ = rep.bounds
        shift = translation(offset - minx, -miny)
        paths.update(shift.representation(rep).paths)
        offset += maxx - minx + 1 + gap
    return Representation(paths)


def _construct_connected(g: Graph, mode: Mode, block_reps: BlockReps | None, root: str | None) -> Representation:
    if len(g) == 1:
        logger.warning("vertex %s is isolated, drawn as a unit segment", g.vertices[0])
        return Representation({g.vertices[0]: GridPath.from_corners([(0, 0), (1, 0)])})
    blocks, cuts = biconnected_components(g)
    mode = resolve_mode(mode, classify_instance(g, blocks, cuts), blocks, cuts, block_reps)
    policy = mode.policy
    if not cuts:
        if root is not None:
            logger.warning("graph is a single block, root %s is ignored", root)
        return _single_block(blocks[0], policy, block_reps)
    bc = build_bc_tree(g, blocks, cuts, root)
    logger.debug("constructing %r in mode %s rooted at %s", g, mode.value, bc.root)
    return construct_bc_recursive(g, bc, policy, block_reps, blocks)


def construct(g: Graph, mode: Mode = Mode.AUTO, block_reps: BlockReps | None = None,
              root: str | None = None) -> Representation:
    """
    build a representation of g with the construction selected by mode

    args:
        block_reps: block id -> representation, needed for blocks that are neither
            edges, cycles nor cliques
        root: cut vertex to root the block-cutpoint tree at

    returns:
        a representation passing verify_representation under mode.policy (B1 for
        cactus and general-B1, L-only for block-graph and general-L)

    raises:
        HypothesisError when g violates the hypotheses of mode
        MissingBlockRepresentationError when a block needs a supplied representation
    """
    if len(g) == 0:
        return Representation()
    if root is not None and root not in g:
        logger.warning("root %s is not a vertex of the graph, using the default root", root)
        root = None
    components = g.connected_components()
    if len(components) == 1:
        return _construct_connected(g, mode, block_reps, root)
    if block_reps:
        logger.warning("block representations are keyed by block id of a connected graph, ignored for %d components",
                       len(components))
    reps = []
    for component in components:
        part = g.subgraph(component)
        reps.append(_construct_connected(part, mode, None, root if root in part else None))
    logger.debug("laid out %d components side by side", len(components))
    rep = place_side_by_side(reps)
    return Representation({v: rep[v] for v in g.vertices})
