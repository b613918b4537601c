"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 usage or I/O error,
3 domain violation (e.g. a polygon that is not centrally symmetric).
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import __version__
from .errors import InvalidInputError, OmegaError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class _Usage(Exception):
    pass


@contextlib.contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
        return
    try:
        fh = open(path, "w", newline="\n")
    except OSError as exc:
        raise _Usage(f"cannot write {path}: {exc.strerror}") from exc
    with fh:
        yield fh


def cmd_leaf(args) -> int:
    from .leaf import write_arcs_csv

    if args.samples < 2:
        raise _Usage("--samples must be at least 2")
    with _output(args.out) as fh:
        write_arcs_csv(fh, args.samples)
    return EXIT_OK


def cmd_dowker(args) -> int:
    from .dowker import lattice_densities
    from .geom import load_cs_polygon_json

    try:
        K = load_cs_polygon_json(args.input)
    except OSError as exc:
        raise _Usage(f"cannot read {args.input}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise _Usage(f"malformed JSON in {args.input}: {exc}") from exc
    res = lattice_densities(K, grid=args.grid, refinements=args.refinements)
    indent = None if args.json else 2
    print(json.dumps(res.to_json(), indent=indent))
    return EXIT_OK


def cmd_regions(args) -> int:
    from .regions import classify

    report = classify((args.x, args.y), tol=args.tol)
    print(json.dumps(report.to_json(), indent=2))
    return EXIT_OK


def cmd_scatter(args) -> int:
    from .plot import scatter_figure
    from .sampler import scatter, write_scatter_csv

    if args.count < 1:
        raise _Usage("--count must be at least 1")
    if args.gon < 2:
        raise _Usage("--gon must be at least 2")
    rows = scatter(args.count, args.seed, args.gon, workers=args.workers)
    if args.out or not args.svg:
        with _output(args.out) as fh:
            write_scatter_csv(fh, rows)
    if args.svg:
        with _output(args.svg) as fh:
            fh.write(scatter_figure([(r.delta_L, r.theta_L) for r in rows]))
    return EXIT_OK


def cmd_validate(args) -> int:
    from .validate import CHECKS, Options, run

    if args.only and args.only not in CHECKS:
        raise _Usage(f"--only must be one of {', '.join(CHECKS)}")
    failed = []
    for outcome in run(args.only, Options(printed_alpha=args.printed_alpha)):
        status = "PASS" if outcome.passed else "FAIL"
        print(f"{status}  {outcome.name:<45} {outcome.detail}")
        if not outcome.passed:
            failed.append(outcome.name)
    if failed:
        print("failed: " + ", ".join(failed))
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="omega", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("leaf", help="write the sampled leaf arcs as CSV")
    s.add_argument("--samples", type=int, default=256, help="samples per arc (>= 2)")
    s.add_argument("--out", default="-", help="output path, '-' for stdout")
    s.set_defaults(func=cmd_leaf)

    s = sub.add_parser("dowker", help="lattice densities of a centrally symmetric polygon")
    s.add_argument("input", help='polygon JSON file: {"vertices": [[x, y], ...]}')
    s.add_argument("--json", action="store_true", help="compact single-line JSON")
    s.add_argument("--grid", type=int, default=48)
    s.add_argument("--refinements", type=int, default=3)
    s.set_defaults(func=cmd_dowker)

    s = sub.add_parser("regions", help="classify a density pair against P, P0, U and the leaf")
    s.add_argument("x", type=float, help="packing density")
    s.add_argument("y", type=float, help="covering density")
    s.add_argument("--tol", type=float, default=1e-9)
    s.set_defaults(func=cmd_regions)

    s = sub.add_parser("scatter", help="lattice densities of random centrally symmetric polygons")
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--gon", type=int, default=4, help="half the number of vertices (4 = octagons)")
    s.add_argument("--out", help="CSV output path ('-' for stdout)")
    s.add_argument("--svg", help="also render the scatter over the region boundaries")
    s.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: $OMEGA_THREADS or 1)")
    s.set_defaults(func=cmd_scatter)

    s = sub.add_parser("validate", help="run the invariant checks")
    s.add_argument("--only", help="run one group: geom, leaf, dowker, regions or sampler")
    s.add_argument("--printed-alpha", action="store_true",
                   help="debug: evaluate alpha with the uncorrected numerator")
    s.set_defaults(func=cmd_validate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"omega {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidInputError as exc:
        print(f"omega {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OmegaError as exc:
        print(f"omega {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
