# -*- coding: utf-8 -*-

"""
Command line interface: ``frieze <verb> [options]`` or ``python -m friezepy``.

Every verb is a thin wrapper around one library call. Results go to stdout
(JSON, JSON lines, CSV or ``key: value`` lines), diagnostics to stderr.
Exit codes: 0 on success, 1 on domain errors (a row that does not close,
a zero met in a chart, degenerate vertices), 2 on usage errors and
malformed input.

The log level is read from the FRIEZE_LOG environment variable.
"""

import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import xarray as xr

from friezepy import io as fio
from friezepy.arithmetic_friezes import (
    DEFAULT_BOUND,
    DOUBLE_COLUMN,
    STAIRCASE,
    TRUE_ZIGZAG,
    ArithFrieze,
    SearchConfig,
    connected_sum,
    dihedral_orbits,
    enumerate_friezes,
    grow_from_unit_zigzag,
    stabilize,
)
from friezepy.cluster import (
    Move,
    ZigZag,
    bipartite_belt,
    frieze_from_zigzag,
    omega_null_vectors,
    omega_rank,
)
from friezepy.coxeter_conway import ClassicalFrieze, cc_enumerate, cc_frieze
from friezepy.diffeq_polygon import (
    is_convex,
    lift_projective,
    monodromy,
    polygon_to_coefficients,
    polygon_to_frieze,
    solve_polygon,
)
from friezepy.errors import FriezeError
from friezepy.frieze2 import (
    CoefficientRow,
    DoubledIndex,
    entry_by_determinant,
    frieze_from_coefficients,
    read_value,
    sl3_subgrids,
    verify_closed_symmetries,
)
from friezepy.numeric_core import format_rat, parse_rats

logger = logging.getLogger(__name__)

LOG_ENV = "FRIEZE_LOG"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

SHAPES = {
    "staircase": STAIRCASE,
    "double-column": DOUBLE_COLUMN,
    "true-zigzag": TRUE_ZIGZAG,
}
MOVES = {"L": Move.LEFT, "S": Move.STRAIGHT, "R": Move.RIGHT}


def configure_logging(environ: Optional[Dict[str, str]] = None):
    """sets the root level from FRIEZE_LOG, WARNING when unset or unknown"""
    environ = os.environ if environ is None else environ
    name = environ.get(LOG_ENV, "WARNING").upper()
    known = name in LOG_LEVELS
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, name) if known else logging.WARNING)
    if not known:
        logger.warning("unknown %s level %r, using WARNING", LOG_ENV, name)


def _load_coefficients(args: argparse.Namespace):
    if getattr(args, "frieze", None):
        return fio.load_frieze(args.frieze)
    if getattr(args, "row", None):
        return CoefficientRow.from_values(parse_rats(args.row))
    raise ValueError("give a frieze file with --frieze or a row with --row")


def _emit_window(ds: xr.Dataset, fmt: str):
    if fmt == "json":
        print(fio.window_to_json(ds))
    else:
        sys.stdout.write(fio.window_to_csv(ds))


def _rat_list(values) -> str:
    return json.dumps([format_rat(v) for v in values])


def cmd_gen(args: argparse.Namespace) -> int:
    coeffs = _load_coefficients(args)
    depth = args.depth if args.depth is not None else max(1, coeffs.n - 3)
    _emit_window(frieze_from_coefficients(coeffs, depth, top=args.top), args.format)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    coeffs = _load_coefficients(args)
    mono = monodromy(coeffs)
    if not mono.is_identity:
        print(f"closed: false, monodromy: {json.dumps([[format_rat(x) for x in row] for row in mono.m.to_lists()])}")
        return 1
    print(f"closed: true, width: {coeffs.n - 4}")
    if args.symmetries:
        report = verify_closed_symmetries(coeffs)
        print(
            f"row periodic: {str(report.row_periodic).lower()},"
            f" diagonal periodic: {str(report.diagonal_periodic).lower()},"
            f" glide: {str(report.glide).lower()}"
        )
    if args.sl3 and coeffs.n >= 5:
        report = sl3_subgrids(frieze_from_coefficients(coeffs, coeffs.n - 3, top=-3))
        print(f"sl3: {str(report.all_unit).lower()}, failures: {len(report.failures)}")
    return 0


def cmd_entries(args: argparse.Namespace) -> int:
    coeffs = _load_coefficients(args)
    index = DoubledIndex(args.p, args.q)
    i, j = Fraction(index.p, 2), Fraction(index.q, 2)
    if args.method == "determinant":
        value = entry_by_determinant(coeffs, i, j)
    elif args.method == "polygon":
        value = polygon_to_frieze(solve_polygon(coeffs), i, j)
    else:
        depth = max(index.row + 1, 1)
        ds = frieze_from_coefficients(coeffs, depth, top=min(0, index.row))
        value = read_value(ds, index.row, index.col)
    print(format_rat(value))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    cfg = SearchConfig(args.n, value_bound=args.bound, parallel_width=args.jobs)
    found = enumerate_friezes(cfg)
    if args.out:
        with open(args.out, "w") as stream:
            fio.write_tuples(found, stream)
    print(f"count: {len(found)}, bound: {args.bound}")
    return 0


def cmd_orbits(args: argparse.Namespace) -> int:
    if args.input:
        with open(args.input) as stream:
            found = fio.read_tuples(stream)
    else:
        found = enumerate_friezes(SearchConfig(args.n, value_bound=args.bound, parallel_width=args.jobs))
    orbits = dihedral_orbits(found)
    print(f"orbits: {len(orbits)}")
    for orbit in orbits:
        print(f"size: {orbit.size}, representative: {json.dumps(list(orbit.representative))}")
    return 0


def cmd_stabilize(args: argparse.Namespace) -> int:
    f = ArithFrieze(_load_coefficients(args))
    print(fio.frieze_to_json(stabilize(f, args.cut).coeffs, closed=True))
    return 0


def cmd_consum(args: argparse.Namespace) -> int:
    f = ArithFrieze(_load_coefficients(args))
    g = ArithFrieze(fio.load_frieze(args.other))
    out = connected_sum(f, g, args.cut_f, args.cut_g)
    print(fio.frieze_to_json(out.coeffs, closed=True))
    return 0


def cmd_polygon(args: argparse.Namespace) -> int:
    if args.polygon:
        with open(args.polygon) as stream:
            poly = fio.polygon_from_json(stream.read())
        print(fio.frieze_to_json(polygon_to_coefficients(poly)))
        return 0
    poly = solve_polygon(_load_coefficients(args))
    print(fio.polygon_to_json(poly))
    if args.convex:
        print(f"convex: {str(is_convex(poly)).lower()}", file=sys.stderr)
    return 0


def cmd_lift(args: argparse.Namespace) -> int:
    with open(args.points) as stream:
        points = fio.points_from_json(stream.read())
    lift = lift_projective(points)
    print(
        json.dumps(
            {
                "vertices": lift.vertices.tolist(),
                "determinants": lift.determinants().tolist(),
                "negative_product": lift.negative_product,
                "convex": lift.is_convex(),
            }
        )
    )
    return 0


def cmd_belt(args: argparse.Namespace) -> int:
    values = parse_rats(args.values) if args.values else (1,) * (2 * (args.n - 4))
    for seed in bipartite_belt(args.n, values, args.steps):
        print(_rat_list(seed.values))
    return 0


def _parse_moves(text: str) -> List[Move]:
    try:
        return [MOVES[s] for s in text.replace(",", "").upper()]
    except KeyError as err:
        raise ValueError(f"moves are L, S or R, got {text!r}") from err


def cmd_zigzag(args: argparse.Namespace) -> int:
    z = ZigZag(args.n, tuple(_parse_moves(args.moves or "S" * (args.n - 5))), args.start)
    values = parse_rats(args.values) if args.values else (1,) * (2 * z.width)
    _emit_window(frieze_from_zigzag(z, values), args.format)
    return 0


def cmd_omega(args: argparse.Namespace) -> int:
    r = omega_rank(args.n)
    null = omega_null_vectors(args.n)
    vector = _rat_list(null[0]) if null else "[]"
    print(f"rank: {r}, corank: {2 * (args.n - 4) - r}, nullvector: {vector}")
    return 0


def cmd_cc(args: argparse.Namespace) -> int:
    if args.count is not None:
        print(f"count: {len(cc_enumerate(args.count, method=args.method))}")
        return 0
    if not args.quiddity:
        raise ValueError("give --quiddity or --count")
    q = ClassicalFrieze.from_values(parse_rats(args.quiddity))
    depth = args.depth if args.depth is not None else max(1, q.n - 3)
    _emit_window(cc_frieze(q, depth), args.format)
    return 0


def cmd_grow(args: argparse.Namespace) -> int:
    shape = SHAPES[args.shape] if args.shape in SHAPES else _parse_moves(args.shape)
    _emit_window(grow_from_unit_zigzag(shape, args.rows, args.cols), args.format)
    return 0


def _frieze_source(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--frieze", help="frieze JSON file")
    group.add_argument("--row", help='coefficient row, e.g. "1,1,2,3,2,1,1,2,3,2"')


def _window_format(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=["csv", "json"], default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frieze", description="exact 2-frieze patterns")
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("gen", help="window of a frieze from its coefficient row")
    _frieze_source(p)
    p.add_argument("--depth", type=int, default=None, help="rows below row -1")
    p.add_argument("--top", type=int, default=0, help="first row, -3 to include the boundary")
    _window_format(p)
    p.set_defaults(func=cmd_gen)

    p = verbs.add_parser("check", help="closure test")
    _frieze_source(p)
    p.add_argument("--symmetries", action="store_true")
    p.add_argument("--sl3", action="store_true")
    p.set_defaults(func=cmd_check)

    p = verbs.add_parser("entries", help="one entry by its doubled index")
    _frieze_source(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument(
        "--method", choices=["recurrence", "determinant", "polygon"], default="recurrence"
    )
    p.set_defaults(func=cmd_entries)

    p = verbs.add_parser("enumerate", help="arithmetic friezes with bounded chart values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="JSON lines file of the tuples")
    p.set_defaults(func=cmd_enumerate)

    p = verbs.add_parser("orbits", help="classes under rotation and reflection")
    p.add_argument("--n", type=int)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--in", dest="input", help="JSON lines file written by enumerate")
    p.set_defaults(func=cmd_orbits)

    p = verbs.add_parser("stabilize", help="one point stabilization")
    _frieze_source(p)
    p.add_argument("--cut", type=int, default=3)
    p.set_defaults(func=cmd_stabilize)

    p = verbs.add_parser("consum", help="connected sum of two friezes")
    _frieze_source(p)
    p.add_argument("--other", required=True, help="frieze JSON file glued in")
    p.add_argument("--cut-f", type=int, default=3)
    p.add_argument("--cut-g", type=int, default=0)
    p.set_defaults(func=cmd_consum)

    p = verbs.add_parser("polygon", help="polygon of a frieze, or back")
    _frieze_source(p)
    p.add_argument("--polygon", help="polygon JSON file to read coefficients from")
    p.add_argument("--convex", action="store_true")
    p.set_defaults(func=cmd_polygon)

    p = verbs.add_parser("lift", help="lift projective points")
    p.add_argument("--points", required=True, help="points JSON file")
    p.set_defaults(func=cmd_lift)

    p = verbs.add_parser("belt", help="bipartite belt of the frieze quiver")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--values", help="initial x's then y's, all ones by default")
    p.add_argument("--steps", type=int, default=None)
    p.set_defaults(func=cmd_belt)

    p = verbs.add_parser("zigzag", help="complete a frieze from a zig-zag chart")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--moves", help="n - 5 moves out of L, S, R")
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--values", help="x's then y's, all ones by default")
    _window_format(p)
    p.set_defaults(func=cmd_zigzag)

    p = verbs.add_parser("omega", help="rank of the exchange matrix")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_omega)

    p = verbs.add_parser("cc", help="Coxeter-Conway friezes")
    p.add_argument("--quiddity", help='quiddity row, e.g. "1,2,2,1,3"')
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--count", type=int, default=None, help="count arithmetic friezes of this period")
    p.add_argument(
        "--method", choices=["insertion", "triangulations", "search"], default="insertion"
    )
    _window_format(p)
    p.set_defaults(func=cmd_cc)

    p = verbs.add_parser("grow", help="infinite frieze from a zig-zag of ones")
    p.add_argument("--shape", default="staircase", help=f"{', '.join(SHAPES)} or moves like RL")
    p.add_argument("--rows", type=int, default=6)
    p.add_argument("--cols", type=int, default=10)
    _window_format(p)
    p.set_defaults(func=cmd_grow)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    configure_logging()
    if args.verb == "belt" and args.steps is None:
        args.steps = 2 * args.n
    if args.verb == "orbits" and not args.input and args.n is None:
        parser.print_usage(sys.stderr)
        print("frieze orbits: give --n or --in", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except FriezeError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError) as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return 2


run: Callable[[Optional[Sequence[str]]], int] = main

if __name__ == "__main__":
    sys.exit(main())
