"""Command line surface: gen, measure, verify, plot.

Exit codes: 0 success, 1 verification/assertion failure, 2 usage error,
3 I/O or schema error.  LUNE_SEED overrides the default verify seed; a
key=value config file may override tolerances.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import LunekitError, SchemaError, UnknownTheoremId
from .io import load_body, save_body, to_document
from .measure import measure
from .sphere import DEFAULT_TOL, SpherePoint, Tolerance
from .verify import SUITE_IDS, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _parse_point(text: str) -> SpherePoint:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected x,y,z")
    return SpherePoint(float(parts[0]), float(parts[1]), float(parts[2]))


def _load_tolerance(path: str | None) -> Tolerance:
    if not path:
        return DEFAULT_TOL
    values = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, val = line.partition("=")
            values[key.strip()] = float(val.strip())
    return Tolerance(
        eps_alg=values.get("eps_alg", DEFAULT_TOL.eps_alg),
        eps_opt=values.get("eps_opt", DEFAULT_TOL.eps_opt),
        eps_claim=values.get("eps_claim", DEFAULT_TOL.eps_claim),
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lunekit",
        description="Convex bodies on the sphere: generate, measure, verify, plot.",
    )
    parser.add_argument("--config", help="key=value file overriding tolerances")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a body document")
    gen.add_argument(
        "shape",
        choices=["cap", "quarter-disk", "reuleaux", "reduced-ngon", "hull-of-points"],
    )
    gen.add_argument("--center", type=_parse_point, default=SpherePoint(0, 0, 1))
    gen.add_argument("--rho", type=float, help="cap radius")
    gen.add_argument("--delta", type=float, help="thickness parameter")
    gen.add_argument("--orientation", type=float, default=0.0)
    gen.add_argument("--n", type=int, help="vertex count (odd)")
    gen.add_argument("--w", type=float, help="constant width")
    gen.add_argument("--points-file", help="JSON list of unit 3-vectors")
    gen.add_argument("--out", help="output file (default stdout)")

    meas = sub.add_parser("measure", help="measure a body document")
    meas.add_argument("body", help="body JSON file")
    meas.add_argument("--json", action="store_true", dest="as_json")

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("--suite", default="all", help="suite id or 'all'")
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--cases", type=int, default=None)

    plot = sub.add_parser("plot", help="render a body to SVG")
    plot.add_argument("body", help="body JSON file")
    plot.add_argument(
        "--projection", choices=["orthographic", "gnomonic"], default="orthographic"
    )
    plot.add_argument("--out", required=True)
    plot.add_argument(
        "--with-lune",
        help="'auto' for the narrowest lune, or six comma-separated pole coordinates",
    )
    plot.add_argument("--with-cap", action="store_true")
    return parser


def _cmd_gen(args, tol: Tolerance) -> int:
    from .bodies import (
        convex_hull,
        make_cap,
        make_quarter_disk,
        make_regular_reduced_polygon,
        make_reuleaux_odd_gon,
    )

    if args.shape == "cap":
        if args.rho is None:
            print("gen cap requires --rho", file=sys.stderr)
            return EXIT_USAGE
        body = make_cap(args.center, args.rho)
    elif args.shape == "quarter-disk":
        if args.delta is None:
            print("gen quarter-disk requires --delta", file=sys.stderr)
            return EXIT_USAGE
        body = make_quarter_disk(args.center, args.delta, args.orientation)
    elif args.shape == "reuleaux":
        if args.n is None or args.w is None:
            print("gen reuleaux requires --n and --w", file=sys.stderr)
            return EXIT_USAGE
        body = make_reuleaux_odd_gon(args.center, args.n, args.w)
    elif args.shape == "reduced-ngon":
        if args.n is None or args.delta is None:
            print("gen reduced-ngon requires --n and --delta", file=sys.stderr)
            return EXIT_USAGE
        body = make_regular_reduced_polygon(args.center, args.n, args.delta)
    else:
        if not args.points_file:
            print("gen hull-of-points requires --points-file", file=sys.stderr)
            return EXIT_USAGE
        with open(args.points_file, encoding="utf-8") as fh:
            pts = [SpherePoint(float(x), float(y), float(z)) for x, y, z in json.load(fh)]
        body = convex_hull(pts, tol)
    if args.out:
        save_body(args.out, body, metadata={"generator": args.shape})
    else:
        json.dump(to_document(body, metadata={"generator": args.shape}), sys.stdout, indent=2)
        sys.stdout.write("\n")
    return EXIT_OK


def _cmd_measure(args, tol: Tolerance) -> int:
    body, _ = load_body(args.body)
    report = measure(body, tol)
    if args.as_json:
        json.dump(report.to_dict(), sys.stdout)
        sys.stdout.write("\n")
    else:
        print(report.to_text())
    return EXIT_OK


def _cmd_verify(args, tol: Tolerance) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("LUNE_SEED", "1"))
    if args.suite == "all":
        suites = list(SUITE_IDS)
    elif args.suite in SUITE_IDS:
        suites = [args.suite]
    else:
        print(f"unknown suite: {args.suite}", file=sys.stderr)
        return EXIT_USAGE
    spec = {}
    if args.cases is not None:
        spec["cases"] = args.cases
    ok = True
    for tid in suites:
        rep = run_suite(tid, spec or None, seed=seed)
        print(rep.to_json())
        ok = ok and rep.passed
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_plot(args, tol: Tolerance) -> int:
    from .svg import render_svg

    body, _ = load_body(args.body)
    lune = None
    if args.with_lune == "auto":
        from .width import thickness

        _, pair = thickness(body, tol)
        lune = (pair.k, pair.k_star)
    elif args.with_lune:
        vals = [float(v) for v in args.with_lune.split(",")]
        if len(vals) != 6:
            print("--with-lune needs 'auto' or six numbers", file=sys.stderr)
            return EXIT_USAGE
        lune = (SpherePoint(*vals[:3]), SpherePoint(*vals[3:]))
    svg = render_svg(
        body,
        projection=args.projection,
        with_lune=lune,
        with_cap=args.with_cap,
    )
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        tol = _load_tolerance(args.config)
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        if args.command == "gen":
            return _cmd_gen(args, tol)
        if args.command == "measure":
            return _cmd_measure(args, tol)
        if args.command == "verify":
            return _cmd_verify(args, tol)
        if args.command == "plot":
            return _cmd_plot(args, tol)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_IO
    except UnknownTheoremId as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except LunekitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser.error("no command")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
