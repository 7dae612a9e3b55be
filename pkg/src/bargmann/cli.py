"""Command-line front end.

    bargmann scatter  --order {3,4} --dim D --samples N --seed S --out PATH --format {csv,json}
    bargmann fraction --dim D --samples N --seed S
    bargmann boundary --region {b3,b4circ} --samples N --out PATH
    bargmann witness  [--states FILE | --overlaps v1 .. v6 | --overlaps-file FILE] [--mode {gauge3,full6}] [--tol T]
    bargmann member   --region {b3,b4circ} --re X --im Y
    bargmann extremes --region {b3,b4circ}

Worker count defaults to $BARGMANN_WORKERS (1 if unset). ``witness`` exits
with 10 when imaginarity is witnessed, 0 when it is not and 2 on invalid
input.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from . import __version__
from .errors import BargmannError
from .experiments import DEFAULT_SAMPLES, ExperimentConfig, default_workers, metadata, run_fraction, run_scatter
from .io import fmt12, loads_candidate, read_states, write_csv
from .regions import Region, boundary_curve, classify, region_extremes
from .witness import WitnessMode, witness_overlaps4, witness_states4

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_WITNESSED = 10

CANDIDATE_HELP = (
    'overlap file: JSON {"overlaps": [d12, d13, d14, d23, d24, d34], "phases": [...]}; '
    "phases are ignored by the witness"
)


@contextmanager
def _sink(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _emit_json(doc: dict, path) -> None:
    with _sink(path) as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def cmd_scatter(args) -> int:
    config = ExperimentConfig(
        dim=args.dim, samples=args.samples, seed=args.seed, workers=args.workers, output_path=args.out, format=args.format
    )
    points = run_scatter(config, args.order)
    meta = metadata(command="scatter", order=args.order, dim=args.dim, samples=args.samples, seed=args.seed)
    if args.format == "json":
        _emit_json({"metadata": meta, "points": [[z.real, z.imag] for z in points.tolist()]}, args.out)
    else:
        rows = ([format(z.real, ".12g"), format(z.imag, ".12g")] for z in points.tolist())
        with _sink(args.out) as fh:
            write_csv(fh, ["re", "im"], rows, meta)
    return EXIT_OK


def cmd_fraction(args) -> int:
    config = ExperimentConfig(dim=args.dim, samples=args.samples, seed=args.seed, workers=args.workers)
    result = run_fraction(config, args.mode, args.tol)
    doc = {"metadata": metadata(command="fraction", mode=args.mode, tolerance=args.tol), **result.to_dict()}
    _emit_json(doc, args.out)
    return EXIT_OK


def cmd_boundary(args) -> int:
    curve = boundary_curve(args.region, args.samples)
    rows = (
        [fmt12(p), fmt12(z.real, abs(z)), fmt12(z.imag, abs(z))] for p, z in zip(curve.phi, curve.values)
    )
    meta = metadata(command="boundary", region=Region(args.region).value, samples=args.samples)
    with _sink(args.out) as fh:
        write_csv(fh, ["phi", "re", "im"], rows, meta)
    return EXIT_OK


def cmd_witness(args) -> int:
    if args.states is not None:
        report = witness_states4(read_states(args.states), args.mode, args.tol)
    else:
        if args.overlaps_file is not None:
            with open(args.overlaps_file) as fh:
                values, _ = loads_candidate(fh.read())
        else:
            values = args.overlaps
        if len(values) != 6:
            raise BargmannError(f"expected 6 overlaps (12, 13, 14, 23, 24, 34), got {len(values)}")
        report = witness_overlaps4(values, args.mode, args.tol)
    _emit_json({"metadata": metadata(command="witness"), **report.to_dict()}, args.out)
    return EXIT_WITNESSED if report.witnessed else EXIT_OK


def cmd_member(args) -> int:
    point = classify(args.region, complex(args.re, args.im))
    print(f"{point.verdict(args.band)} {point.boundary_distance:.12g}")
    return EXIT_OK


def cmd_extremes(args) -> int:
    ext = region_extremes(args.region)
    doc = {
        "metadata": metadata(command="extremes", region=Region(args.region).value),
        **{k: {"value": e.value, "phi": e.phi} for k, e in ext.items()},
    }
    _emit_json(doc, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bargmann", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    regions = [r.value for r in Region]
    modes = [m.value for m in WitnessMode]

    p = sub.add_parser("scatter", help="invariants of Haar-random tuples")
    p.add_argument("--order", type=int, choices=(3, 4), required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default="-")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("fraction", help="fraction of Haar 4-tuples witnessed by overlaps")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--mode", choices=modes, default="gauge3")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_fraction)

    p = sub.add_parser("boundary", help="export a region boundary as CSV (phi, re, im)")
    p.add_argument("--region", choices=regions, required=True)
    p.add_argument("--samples", type=int, default=1024)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("witness", help="overlap-only imaginarity witness for 4 states", epilog=CANDIDATE_HELP)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--states", help='state file: JSON {"dim": d, "states": [[[re, im], ...], ...]}')
    src.add_argument("--overlaps", type=float, nargs="+", metavar="V", help="d12 d13 d14 d23 d24 d34")
    src.add_argument("--overlaps-file")
    p.add_argument("--mode", choices=modes, default="gauge3")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("member", help="classify a complex value against a region")
    p.add_argument("--region", choices=regions, required=True)
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, required=True)
    p.add_argument("--band", type=float, default=1e-6)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("extremes", help="most negative real part and largest imaginary part on a boundary")
    p.add_argument("--region", choices=regions, required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_extremes)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 0) is None:
        args.workers = default_workers()
    try:
        return args.func(args)
    except BargmannError as exc:
        print(f"bargmann: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"bargmann: error: {exc}", file=sys.stderr)
        return EXIT_IO
