"""Command line: layout, verify, force-ratio, render.

Exit codes: 0 success, 1 verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from .geometry import GeometryError
from .graph import ProgramError, build_graph
from .io import (
    ProgramSyntaxError, SemanticError, certificate, emit_layout, emit_program, emit_report,
    parse_layout, parse_program,
)

OK, FAILED, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _write(path: Optional[str], text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _program(path: str):
    try:
        return parse_program(_read(path))
    except ProgramSyntaxError as exc:
        raise InputError(f"{path}: {exc}") from None
    except SemanticError as exc:
        raise InputError(f"{path}: {exc}") from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def cmd_layout(args) -> int:
    from .layout import layout
    from .verify import verify_scr

    p = _program(args.program)
    g, scr = layout(p)
    report = verify_scr(g, scr, p.targets, p.eps)
    _write(args.output, emit_layout(scr))
    if not report.ok:
        sys.stderr.write(emit_report(report))
        return FAILED
    return OK


def cmd_verify(args) -> int:
    from .verify import verify_scr

    p = _program(args.program)
    try:
        scr = parse_layout(_read(args.layout))
    except ProgramSyntaxError as exc:
        raise InputError(f"{args.layout}: {exc}") from None
    report = verify_scr(build_graph(p), scr, p.targets, p.eps)
    sys.stdout.write(emit_report(report))
    return OK if report.ok else FAILED


def cmd_force_ratio(args) -> int:
    from .forcing import force_ratio

    result = force_ratio(args.r, args.delta, args.eps)
    n_ops = result.padding.m * (result.padding.per_square + 1)
    if n_ops > args.max_ops:
        raise InputError(f"program would need {n_ops} operations (limit {args.max_ops}); "
                         "use a larger --delta or raise --max-ops")
    _write(args.output, emit_program(result.program))
    cert = json.dumps(certificate(result), indent=2, sort_keys=True) + "\n"
    if args.cert:
        _write(args.cert, cert)
    elif args.output and args.output != "-":
        _write(args.output + ".cert.json", cert)
    return OK


def cmd_render(args) -> int:
    from .svg import emit_svg

    try:
        scr = parse_layout(_read(args.layout))
    except ProgramSyntaxError as exc:
        raise InputError(f"{args.layout}: {exc}") from None
    _write(args.output, emit_svg(scr, scale=args.scale, labels=not args.no_labels))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="squarecontact", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("layout", help="lay out a build program")
    p.add_argument("program")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_layout)

    p = sub.add_parser("verify", help="check a layout against a build program")
    p.add_argument("program")
    p.add_argument("layout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("force-ratio", help="emit a program pinning the central gap ratio")
    p.add_argument("--r", type=_fraction, required=True)
    p.add_argument("--delta", type=_fraction, required=True)
    p.add_argument("--eps", type=_fraction, default=Fraction(1, 100),
                   help="tolerance written into the program")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--cert", help="certificate path (default: <output>.cert.json)")
    p.add_argument("--max-ops", type=int, default=2_000_000)
    p.set_defaults(func=cmd_force_ratio)

    p = sub.add_parser("render", help="draw a layout as SVG")
    p.add_argument("layout")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--scale", type=float, default=40.0)
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args)
    except (InputError, ProgramError, GeometryError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
