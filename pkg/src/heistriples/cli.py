"""Command-line front end.

Subcommands: verify, abc, triple, random, sample.  Exit codes: 0 for
success/verified, 1 for a failed verification (not equidistant, angles
off the surface), 2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .equidistant import (
    EquidistantTriple,
    SurfacePoint,
    abc_from_triple,
    classify_triple,
    is_equidistant,
    random_equidistant_triple,
    triple_from_abc,
)
from .boundary import cartan_invariant
from .errors import DegenerateConfiguration, GeometryError, NotEquidistant, OffSurface
from .surface import MIN_RESOLUTION, build_surface_mesh, write_csv, write_obj

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _read_triple(path: str) -> EquidistantTriple:
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    return EquidistantTriple.from_dict(data)


def _parse_component(text: str) -> tuple[int, int, int]:
    parts = [int(p) for p in text.split(",")]
    if len(parts) == 1:
        if parts[0] != 0:
            raise ValueError(
                "a lone component id must be 0 (the central component); "
                "other components are named by three 2pi-shift integers n1,n2,n3")
        return (0, 0, 0)
    if len(parts) != 3:
        raise ValueError("component must be '0' or three integers 'n1,n2,n3'")
    return (parts[0], parts[1], parts[2])


def cmd_verify(args) -> int:
    triple = _read_triple(args.input)
    d12, d23, d31 = triple.distances()
    equidistant = is_equidistant(triple, args.tol)
    report = {
        "distances": [d12, d23, d31],
        "spread": triple.spread(),
        "tol": args.tol,
        "equidistant": equidistant,
        "cartan": cartan_invariant(triple.p1, triple.p2, triple.p3),
        "class": None,
        "surface_point": None,
    }
    if equidistant:
        report["class"] = classify_triple(triple, equidistant_tol=args.tol).value
        report["surface_point"] = abc_from_triple(triple, args.tol).to_dict()
    _print_json(report)
    return EXIT_OK if equidistant else EXIT_FAILED


def cmd_abc(args) -> int:
    triple = _read_triple(args.input)
    _print_json(abc_from_triple(triple, args.tol).to_dict())
    return EXIT_OK


def cmd_triple(args) -> int:
    point = SurfacePoint(args.a, args.b, args.c)
    triple = triple_from_abc(point, args.tol)
    _print_json(triple.to_dict())
    return EXIT_OK


def cmd_random(args) -> int:
    if args.count < 1:
        _fail("count must be at least 1")
        return EXIT_INPUT
    rng = random.Random(args.seed)
    for _ in range(args.count):
        triple = random_equidistant_triple(rng=rng, with_similarity=args.with_similarity)
        _print_json(triple.to_dict())
    return EXIT_OK


def cmd_sample(args) -> int:
    try:
        component = _parse_component(args.component)
    except ValueError as exc:
        _fail(str(exc))
        return EXIT_INPUT
    if args.resolution < MIN_RESOLUTION:
        _fail(f"resolution must be at least {MIN_RESOLUTION}")
        return EXIT_INPUT
    mesh = build_surface_mesh(args.resolution, component)
    writer = write_csv if args.format == "csv" else write_obj
    if args.output == "-":
        writer(mesh, sys.stdout)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            writer(mesh, fh)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heistriples",
        description="Equidistant triples in the Heisenberg group and their "
                    "angle-surface parametrization.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a JSON triple for equidistance")
    p.add_argument("input", nargs="?", default="-",
                   help="path to a JSON triple, or - for stdin")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("abc", help="angle invariant of an equidistant triple")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_abc)

    p = sub.add_parser("triple", help="build a triple from surface angles")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_triple)

    p = sub.add_parser("random", help="generate random equidistant triples")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--with-similarity", action=argparse.BooleanOptionalAction,
                   default=True,
                   help="move each normalized triple by a random similarity")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("sample", help="sample the angle surface to CSV or OBJ")
    p.add_argument("--resolution", type=int, default=64)
    p.add_argument("--format", choices=("csv", "obj"), default="csv")
    p.add_argument("--output", default="-", help="output path, or - for stdout")
    p.add_argument("--component", default="0",
                   help="'0' for the central component, or 'n1,n2,n3' 2pi shifts")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (NotEquidistant, OffSurface) as exc:
        _fail(str(exc))
        return EXIT_FAILED
    except DegenerateConfiguration as exc:
        _fail(str(exc))
        return EXIT_INPUT
    except GeometryError as exc:
        _fail(str(exc))
        return EXIT_FAILED
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        _fail(f"could not parse input: {exc}")
        return EXIT_INPUT
    except OSError as exc:
        _fail(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
