"""Command-line interface.

Subcommands: generate, hull, validate, fvector, polar, bench.  Exit codes:
0 success, 1 usage error, 2 unreadable or malformed input, 3 validation
failure.  All polytope data travels in the POLY text format; hull output
for non-full-dimensional input renders each affine-hull equation as a
pair of opposite halfspaces in the H section.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .bench import bench_spec, format_summary, render_csv, run_bench
from .generators import FAMILIES, GeneratorSpec, generate
from .geometry import Polytope, Triangulation, affine_basis
from .hull import InsertionOrder, convex_hull
from .oracle import IncidenceMatrix, enumerate_faces, validate_triangulation
from .polyfile import (
    PolyData,
    PolyParseError,
    parse_poly,
    parse_triangulation,
    write_poly,
    write_triangulation,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INVALID = 3


class _Parser(argparse.ArgumentParser):
    """argparse with the documented usage exit code (1, not 2)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="bbhull", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_family_params(p):
        p.add_argument("--d", type=int, help="ambient dimension")
        p.add_argument("--s", type=int, help="gons per polygon factor")
        p.add_argument("--n", type=int, help="number of points")
        p.add_argument("--a", type=int, help="first simplex factor dimension")
        p.add_argument("--b", type=int, help="second simplex factor dimension")
        p.add_argument("--seed", type=int, default=0, help="PRNG seed")

    p = sub.add_parser("generate", help="emit a benchmark family instance as POLY")
    p.add_argument("family", choices=FAMILIES)
    add_family_params(p)
    p.add_argument("-o", "--output", help="output file (default stdout)")

    p = sub.add_parser("hull", help="convex hull of the V section")
    p.add_argument("file")
    p.add_argument(
        "--order",
        choices=("given", "random", "lex"),
        default="given",
        help="insertion order (lex = ascending coordinate order)",
    )
    p.add_argument("--seed", type=int, help="seed for --order random")
    p.add_argument("--stats", action="store_true", help="print counters to stderr")
    p.add_argument("--triangulation-out", help="write the placing triangulation")
    p.add_argument("-o", "--output", help="output file (default stdout)")

    p = sub.add_parser("validate", help="check a triangulation against its points")
    p.add_argument("file")
    p.add_argument("--triangulation", required=True)

    p = sub.add_parser("fvector", help="face counts of the hull of the V section")
    p.add_argument("file")

    p = sub.add_parser("polar", help="polar point set about an interior point")
    p.add_argument("file")
    p.add_argument(
        "--interior", required=True, help="comma-separated rationals, e.g. 1/2,1/2"
    )
    p.add_argument("-o", "--output", help="output file (default stdout)")

    p = sub.add_parser("bench", help="repeated hulls with counter summaries")
    p.add_argument("target", help=f"family ({', '.join(FAMILIES)}) or a POLY file")
    add_family_params(p)
    p.add_argument("--runs", type=int, default=5)
    p.add_argument(
        "--order", choices=("given", "random", "lex"), default="random"
    )
    p.add_argument("--csv", help="write one row per run")
    return parser


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise PolyParseError(0, f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _spec_from_args(args, family: str) -> GeneratorSpec:
    return GeneratorSpec(
        family=family, d=args.d, s=args.s, n=args.n, a=args.a, b=args.b, seed=args.seed
    )


def _need_points(data: PolyData, path: str) -> list:
    if data.points is None:
        raise PolyParseError(0, f"{path} has no V section")
    return data.points


def _insertion_order(args) -> InsertionOrder:
    return InsertionOrder(args.order, getattr(args, "seed", None))


def _cmd_generate(args) -> int:
    poly = generate(_spec_from_args(args, args.family))
    data = PolyData(
        dim=poly.ambient_dim,
        points=poly.points,
        halfspaces=poly.facets if poly.facets else None,
    )
    _emit(write_poly(data), args.output)
    return EXIT_OK


def _cmd_hull(args) -> int:
    data = parse_poly(_read_file(args.file))
    points = _need_points(data, args.file)
    poly, tri, stats = convex_hull(points, _insertion_order(args))
    halfspaces = list(poly.facets)
    for eq in poly.affine_hull:
        halfspaces.append(eq)
        halfspaces.append(-eq)
    out = PolyData(
        dim=poly.ambient_dim,
        points=[poly.points[i] for i in poly.vertex_indices],
        halfspaces=halfspaces,
    )
    _emit(write_poly(out), args.output)
    if args.triangulation_out:
        _emit(write_triangulation(tri), args.triangulation_out)
    if args.stats:
        n, m, t = stats.steps[-1]
        print(f"points      {n}", file=sys.stderr)
        print(f"vertices    {len(poly.vertex_indices)}", file=sys.stderr)
        print(f"facets      {len(poly.facets)}", file=sys.stderr)
        print(f"cells       {t}", file=sys.stderr)
        print(f"star_last   {stats.star_of_last}", file=sys.stderr)
        print(f"evaluations {stats.evaluations}", file=sys.stderr)
        print("step  n  m  t", file=sys.stderr)
        for k, (n, m, t) in enumerate(stats.steps):
            print(f"{k:4d} {n:3d} {m:3d} {t:4d}", file=sys.stderr)
    return EXIT_OK


def _cmd_validate(args) -> int:
    data = parse_poly(_read_file(args.file))
    points = _need_points(data, args.file)
    tdim, cells = parse_triangulation(_read_file(args.triangulation))
    poly, _, _ = convex_hull(points)
    if tdim != poly.dim:
        print(
            f"triangulation dimension {tdim} != hull dimension {poly.dim}",
            file=sys.stderr,
        )
        return EXIT_INVALID
    tri = Triangulation(points=poly.points, cells=cells, dim=tdim)
    report = validate_triangulation(tri, poly)
    for err in report.errors:
        print(err, file=sys.stderr)
    print(
        f"cells {len(cells)}  volume {report.volume}  "
        f"expected {report.expected_volume}  ridges {report.ridge_histogram}"
    )
    return EXIT_OK if report.ok else EXIT_INVALID


def _cmd_fvector(args) -> int:
    data = parse_poly(_read_file(args.file))
    points = _need_points(data, args.file)
    poly, _, _ = convex_hull(points)
    fvec = enumerate_faces(IncidenceMatrix.from_polytope(poly), poly.dim)
    print(" ".join(str(c) for c in fvec))
    return EXIT_OK


def _cmd_polar(args) -> int:
    from .geometry import polar as polar_map

    data = parse_poly(_read_file(args.file))
    try:
        interior = tuple(Fraction(tok) for tok in args.interior.split(","))
    except (ValueError, ZeroDivisionError):
        raise PolyParseError(0, f"bad interior point {args.interior!r}") from None
    if data.halfspaces is not None:
        poly = Polytope(
            points=data.points or [], dim=data.dim, facets=data.halfspaces
        )
    else:
        poly, _, _ = convex_hull(_need_points(data, args.file))
        if poly.dim != poly.ambient_dim:
            raise PolyParseError(0, "polar needs a full-dimensional polytope")
    pts = polar_map(poly, interior)
    _emit(write_poly(PolyData(dim=len(interior), points=pts)), args.output)
    return EXIT_OK


def _cmd_bench(args) -> int:
    order = {"lex": "lexicographic"}.get(args.order, args.order)
    if args.target in FAMILIES:
        spec = _spec_from_args(args, args.target)
        records, summaries = bench_spec(
            spec, runs=args.runs, order=order, seed=args.seed
        )
    else:
        data = parse_poly(_read_file(args.target))
        points = _need_points(data, args.target)
        dim, _ = affine_basis(points)
        records, summaries = run_bench(
            points,
            instance=args.target,
            d=dim,
            runs=args.runs,
            order=order,
            seed=args.seed,
        )
    if args.csv:
        _emit(render_csv(records), args.csv)
    print(f"{records[0].instance}: {args.runs} runs, order {order}")
    print(format_summary(summaries))
    return EXIT_OK


_COMMANDS = {
    "generate": _cmd_generate,
    "hull": _cmd_hull,
    "validate": _cmd_validate,
    "fvector": _cmd_fvector,
    "polar": _cmd_polar,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except PolyParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
