"""
command line entry point

    python main.py analyze graph.txt
    python main.py represent graph.txt --mode cactus --out rep.json
    python main.py verify graph.txt rep.json --policy b1
    python main.py render rep.json --format svg --out rep.svg
    python main.py gen --class cactus --n 50 --seed 1
    python main.py bench --sizes 1000 10000

exit status: 0 ok, 1 verification failed, 2 parse error, 3 hypothesis violated,
4 vertex sets differ
"""
from __future__ import annotations
import argparse
import json
import logging
import os
import re
import sys
import time
from pathlib import Path

from blocks import biconnected_components, build_bc_tree, classify_instance
from config import (
    DEFAULT_CLIQUE_MAX,
    DEFAULT_CYCLE_BIAS,
    DEFAULT_CYCLE_MAX,
    DEFAULT_SEED,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_VERIFY_FAILED,
    SEED_ENV_VAR,
)
from constructor import construct, resolved_policy
from generators import random_block_graph, random_cactus, random_composed_graph, random_tree
from graph import Graph, read_graph
from path import Representation, read_representation, verify_representation
from render import FORMATS, Renderer, render_text
from utils import GridPathsError, Mode, ShapePolicy

logger = logging.getLogger(__name__)

BLOCK_REP_FILE = re.compile(r"^(\d+)\.json$")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def analysis_report(g: Graph) -> dict:
    """blocks, cut vertices, rooted block-cutpoint tree and classification of every component"""
    components = []
    parts = g.connected_components()
    for component in parts:
        part = g.subgraph(component) if len(parts) > 1 else g
        blocks, cuts = biconnected_components(part)
        tree = build_bc_tree(part, blocks, cuts, rooted=bool(cuts))
        components.append({
            "blocks": [{"id": b.id, "kind": str(b.kind), "vertices": list(b.vertices)} for b in blocks],
            "cut_vertices": [v for v in part.vertices if v in cuts],
            "root": tree.root,
            "parents": tree.parent_pointers(),
            "classification": classify_instance(part, blocks, cuts).as_dict(),
        })
    return {"vertices": len(g), "edges": g.edge_count, "components": components}


def cmd_analyze(args) -> int:
    g = read_graph(args.input)
    report = analysis_report(g)
    if args.json:
        print(json.dumps(report, indent=2))
        return EXIT_OK
    print(f"vertices: {report['vertices']}, edges: {report['edges']}")
    for index, component in enumerate(report["components"]):
        if len(report["components"]) > 1:
            print(f"component {index}:")
        print(f"blocks: {len(component['blocks'])}")
        for block in component["blocks"]:
            print(f"  B{block['id']} {block['kind']}: {' '.join(block['vertices'])}")
        print(f"cut vertices: {' '.join(component['cut_vertices']) or 'none'}")
        if component["root"] is None:
            print("bc-tree: single block, no root")
        else:
            print(f"bc-tree root: {component['root']}")
            for node, parent in component["parents"].items():
                if parent is not None:
                    print(f"  {node} -> {parent}")
        flags = " ".join(f"{name}={'yes' if value else 'no'}" for name, value in component["classification"].items())
        print(f"classification: {flags}")
    return EXIT_OK


def load_block_reps(directory: str | None) -> dict[int, Representation]:
    """representations named <block id>.json in directory"""
    if directory is None:
        return {}
    reps = {}
    for file in sorted(Path(directory).iterdir()):
        match = BLOCK_REP_FILE.match(file.name)
        if match:
            reps[int(match.group(1))] = read_representation(file)
    logger.debug("loaded %d block representations from %s", len(reps), directory)
    return reps


def representation_summary(rep: Representation, seconds: float) -> str:
    minx, miny, maxx, maxy = rep.bounds
    census = " ".join(f"{shape}={count}" for shape, count in rep.shape_census().items())
    return "\n".join([
        f"paths: {len(rep)}",
        f"max bends: {rep.max_bends()}",
        f"shapes: {census}",
        f"bounding box: ({minx}, {miny}) - ({maxx}, {maxy}), side {rep.side_length}",
        f"wall time: {seconds:.3f}s",
    ]) + "\n"


def cmd_represent(args) -> int:
    g = read_graph(args.input)
    mode = Mode(args.mode)
    start = time.perf_counter()
    rep = construct(g, mode, load_block_reps(args.block_reps), args.root)
    elapsed = time.perf_counter() - start
    _emit(rep.to_json(), args.out)
    summary = representation_summary(rep, elapsed)
    # keep stdout clean when it carries the json
    (sys.stderr if args.out is None else sys.stdout).write(summary)
    if args.check:
        report = verify_representation(rep, g, resolved_policy(g, mode))
        if not report.passed:
            sys.stderr.write(report.summary() + "\n")
            return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    rep = read_representation(args.representation)
    report = verify_representation(rep, g, ShapePolicy(args.policy))
    if args.json:
        print(json.dumps(report.as_dict(), indent=2))
    else:
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_render(args) -> int:
    rep = read_representation(args.representation)
    if args.format == "png":
        if args.out is None:
            raise GridPathsError("png output needs --out")
        Renderer(rep).to_png(args.out)
    else:
        _emit(render_text(rep, args.format), args.out)
    return EXIT_OK


def resolve_seed(seed: int, parser: argparse.ArgumentParser) -> int:
    """the environment variable wins over --seed"""
    value = os.environ.get(SEED_ENV_VAR)
    if value is None:
        return seed
    try:
        return int(value)
    except ValueError:
        parser.error(f"{SEED_ENV_VAR} must be an integer, got {value!r}")


def generate(args, seed: int) -> Graph:
    if args.graph_class == "tree":
        return random_tree(args.n, seed)
    if args.graph_class == "cactus":
        return random_cactus(args.n, seed, args.cycle_bias, args.cycle_max)
    if args.graph_class == "block-graph":
        return random_block_graph(args.n, seed, args.clique_max)
    return random_composed_graph(args.n, seed, universal=not args.violating)


def cmd_gen(args) -> int:
    sys.stdout.write(generate(args, args.seed).to_edge_list())
    return EXIT_OK


def cmd_bench(args) -> int:
    """construction plus verification time on random cacti of growing size"""
    for n in args.sizes:
        g = random_cactus(n, args.seed)
        start = time.perf_counter()
        rep = construct(g, Mode.CACTUS)
        built = time.perf_counter()
        report = verify_representation(rep, g, ShapePolicy.B1)
        done = time.perf_counter()
        print(f"n={n} construct={built - start:.3f}s verify={done - built:.3f}s "
              f"total={done - start:.3f}s side={rep.side_length} {'pass' if report.passed else 'FAIL'}")
        if not report.passed:
            return EXIT_VERIFY_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gridpaths", description="single bend grid path representations of graphs")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="errors only")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="blocks, cut vertices and classification")
    analyze.add_argument("input")
    analyze.add_argument("--json", action="store_true")
    analyze.set_defaults(func=cmd_analyze)

    represent = commands.add_parser("represent", help="construct a representation")
    represent.add_argument("input")
    represent.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.AUTO.value)
    represent.add_argument("--root", help="cut vertex to root the block-cutpoint tree at")
    represent.add_argument("--block-reps", help="directory of <block id>.json representations")
    represent.add_argument("--out", help="output json file, stdout by default")
    represent.add_argument("--check", action="store_true", help="verify the result before exiting")
    represent.set_defaults(func=cmd_represent)

    verify = commands.add_parser("verify", help="check a representation against a graph")
    verify.add_argument("graph")
    verify.add_argument("representation")
    verify.add_argument("--policy", choices=[p.value for p in ShapePolicy], default=ShapePolicy.B1.value)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=cmd_verify)

    render = commands.add_parser("render", help="draw a representation")
    render.add_argument("representation")
    render.add_argument("--format", choices=FORMATS, default="svg")
    render.add_argument("--out")
    render.set_defaults(func=cmd_render)

    gen = commands.add_parser("gen", help="random instance as an edge list")
    gen.add_argument("--class", dest="graph_class", choices=["tree", "cactus", "block-graph", "composed"],
                     default="tree")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=DEFAULT_SEED)
    gen.add_argument("--cycle-bias", type=float, default=DEFAULT_CYCLE_BIAS)
    gen.add_argument("--cycle-max", type=int, default=DEFAULT_CYCLE_MAX)
    gen.add_argument("--clique-max", type=int, default=DEFAULT_CLIQUE_MAX)
    gen.add_argument("--violating", action="store_true", help="composed graph breaking the universal cut condition")
    gen.set_defaults(func=cmd_gen)

    bench = commands.add_parser("bench", help="time construction and verification on random cacti")
    bench.add_argument("--sizes", type=int, nargs="+", default=[1000, 10000])
    bench.add_argument("--seed", type=int, default=DEFAULT_SEED)
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.ERROR if args.quiet else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr, force=True)

    if args.command == "gen" and args.n < 1:
        parser.error("--n must be at least 1")
    if args.command == "bench" and any(n < 1 for n in args.sizes):
        parser.error("--sizes must be positive")
    if args.command in ("gen", "bench"):
        args.seed = resolve_seed(args.seed, parser)

    try:
        return args.func(args)
    except GridPathsError as e:
        logger.error("%s", e)
        return e.exit_code
    except (OSError, ValueError, KeyError, TypeError) as e:
        # unreadable files, malformed json and bad generator parameters
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
