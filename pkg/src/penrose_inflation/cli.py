"""Command-line front end.

Exit codes: 0 success, 1 verification failure or domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .golden import Quad
from .inflation import (
    PreconditionError,
    enumerate_lambda,
    find_centers,
    triple_from_abg,
    verify_patch,
)
from .lattice import level
from .patchio import PatchFormatError, read_patch, write_patch
from .pattern import Shift, build_edges_faces, generate, singular_witness
from .scan import BoxTooLargeError
from .svg import render_svg


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {text!r}")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return v


def _shift(text: str) -> Shift:
    try:
        return Shift.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point(text: str) -> tuple:
    parts = text.split(",")
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 5 comma-separated integers, got {text!r}") from None
    if len(vals) != 5:
        raise argparse.ArgumentTypeError(f"expected 5 comma-separated integers, got {text!r}")
    return vals


def _bound(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return v


def _fmt12(q: Quad) -> str:
    return f"{float(q):.12g}"


def _triple_args(p):
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="penrose-inflation",
        description="Exact Penrose-type patterns and their inflation symmetries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a patch and write it as JSON")
    p.add_argument("--shift", type=_shift, default=Shift())
    p.add_argument("--radius", type=_positive_float, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--svg")

    p = sub.add_parser("factors", help="list inflation factors up to a bound")
    p.add_argument("--bound", type=_bound, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("centers", help="search inflation centers for a triple")
    _triple_args(p)
    p.add_argument("--shift", type=_shift, default=Shift())
    p.add_argument("--search-radius", type=_positive_float, required=True)
    p.add_argument("--max", type=_positive_int, default=100)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="check a patch maps into the pattern")
    p.add_argument("--patch", required=True)
    _triple_args(p)
    p.add_argument("--center", type=_point, default=(0, 0, 0, 0, 0))

    p = sub.add_parser("singular", help="look for a lattice point on the window frontier")
    p.add_argument("--shift", type=_shift, default=Shift())
    p.add_argument("--radius", type=_positive_float, required=True)

    p = sub.add_parser("render", help="render a patch JSON as SVG")
    p.add_argument("--patch", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--px-per-unit", type=_positive_float, default=40.0)
    return parser


def _cmd_gen(args, out):
    patch = build_edges_faces(generate(args.shift, args.radius))
    write_patch(patch, args.out)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(patch))
    flag = f"singular (witness {list(patch.witness)})" if patch.singular else "no frontier point within radius"
    print(f"{len(patch.points)} points, {len(patch.edges)} edges, {len(patch.faces)} faces; {flag}", file=out)
    return 0


def _cmd_factors(args, out):
    rows = enumerate_lambda(Quad(args.bound))
    if args.json:
        doc = [
            {
                "lambda": _fmt12(f.value),
                "exact": str(f.value),
                "witnesses": [{"branch": n, "beta": b, "gamma": g, "class": c.value} for n, b, g, c in f.witnesses],
                "class": f.cls.value,
            }
            for f in rows
        ]
        print(json.dumps(doc, indent=1, ensure_ascii=False), file=out)
        return 0
    print(f"{'lambda':>16}  {'exact':<16} {'n':>2} {'beta':>5} {'gamma':>5}  class", file=out)
    for f in rows:
        for n, b, g, c in f.witnesses:
            print(f"{_fmt12(f.value):>16}  {str(f.value):<16} {n:>2} {b:>5} {g:>5}  {c.value}", file=out)
    return 0


def _cmd_centers(args, out):
    t = triple_from_abg(args.alpha, args.beta, args.gamma)
    res = find_centers(args.shift, t, args.search_radius, args.max)
    if args.json:
        doc = {
            "triple": [t.alpha, t.beta, t.gamma],
            "lambda": str(t.lam),
            "shift": args.shift.as_strings(),
            "margin": str(res[0].margin_used) if res else None,
            "centers": [{"t": list(r.t), "pos": list(r.center_display)} for r in res],
        }
        print(json.dumps(doc, indent=1, ensure_ascii=False), file=out)
        return 0
    print(f"lambda = {t.lam} ~ {_fmt12(t.lam)}; {len(res)} centers", file=out)
    for r in res:
        print(f"{','.join(map(str, r.t)):>24}  ({r.center_display[0]:.12g}, {r.center_display[1]:.12g})", file=out)
    return 0


def _cmd_verify(args, out):
    patch = read_patch(args.patch)
    t = triple_from_abg(args.alpha, args.beta, args.gamma)
    if level(args.center) != 0:
        raise PreconditionError("center_level", f"center {args.center} must have coordinate sum 0")
    rep = verify_patch(patch, t, args.center)
    for x, y, status in rep.failures:
        print(f"FAIL preimage {','.join(map(str, x))} -> {','.join(map(str, y))}: {status}", file=out)
    print(rep.summary(), file=out)
    return 0 if rep.ok else 1


def _cmd_singular(args, out):
    w = singular_witness(args.shift, args.radius)
    if w is None:
        print("no witness within radius", file=out)
    else:
        print("witness " + ",".join(map(str, w)), file=out)
    return 0


def _cmd_render(args, out):
    patch = read_patch(args.patch)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_svg(patch, px_per_unit=args.px_per_unit))
    print(f"wrote {args.out}", file=out)
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "factors": _cmd_factors,
    "centers": _cmd_centers,
    "verify": _cmd_verify,
    "singular": _cmd_singular,
    "render": _cmd_render,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except PreconditionError as exc:
        print(f"error [{exc.code}]: {exc}", file=err)
    except (PatchFormatError, BoxTooLargeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
    return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
