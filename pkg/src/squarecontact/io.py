"""Text formats for build programs, layouts and verification reports.

All formats start with a ``format=1`` line. Rationals are written as ``p/q``
(or plain integers) so a round trip is lossless.

Program::

    format=1
    c4
    vertex 0 h        # insert a vertex into face 0 joined to its left/right corners
    cycle 2           # insert a 4-cycle into face 2
    target 1 3/2
    eps 1/100

Layout::

    format=1
    frame x y w h
    square <vertex> x y side
    gap <face> x y w h
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from .geometry import Rect, Square
from .graph import BuildProgram, InsertCycle, InsertVertex, SplitPair, validate_program

FORMAT_LINE = "format=1"


class ProgramSyntaxError(ValueError):
    def __init__(self, line: int, col: int, expected: str, got: str = ""):
        self.line, self.col, self.expected = line, col, expected
        found = f", got {got!r}" if got else ""
        super().__init__(f"line {line}, col {col}: expected {expected}{found}")


class SemanticError(ValueError):
    def __init__(self, diagnostics: List[str]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(diagnostics))

    @property
    def kinds(self) -> List[str]:
        return [d.split("@")[0].split(":")[0] for d in self.diagnostics]


def fmt(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass
class _Token:
    text: str
    col: int


def _tokens(line: str) -> List[_Token]:
    body = line.split("#", 1)[0]
    out, i = [], 0
    while i < len(body):
        if body[i].isspace():
            i += 1
            continue
        j = i
        while j < len(body) and not body[j].isspace():
            j += 1
        out.append(_Token(body[i:j], i + 1))
        i = j
    return out


def _rational(tok: _Token, lineno: int) -> Fraction:
    try:
        return Fraction(tok.text)
    except (ValueError, ZeroDivisionError):
        raise ProgramSyntaxError(lineno, tok.col, "a rational p/q", tok.text) from None


def _integer(tok: _Token, lineno: int, what: str) -> int:
    if not tok.text.isdigit():
        raise ProgramSyntaxError(lineno, tok.col, what, tok.text)
    return int(tok.text)


def _header(lines: List[str]) -> int:
    """Index of the first line after the format header."""
    for i, line in enumerate(lines):
        toks = _tokens(line)
        if not toks:
            continue
        if toks[0].text != FORMAT_LINE or len(toks) > 1:
            raise ProgramSyntaxError(i + 1, toks[0].col, FORMAT_LINE, toks[0].text)
        return i + 1
    raise ProgramSyntaxError(1, 1, FORMAT_LINE, "end of input")


def parse_program(text: str, validate: bool = True) -> BuildProgram:
    lines = text.splitlines()
    start = _header(lines)
    p = BuildProgram()
    eps: Optional[Fraction] = None
    seen_c4 = False
    for lineno, line in enumerate(lines[start:], start=start + 1):
        toks = _tokens(line)
        if not toks:
            continue
        head, args = toks[0], toks[1:]

        def arity(n: int, expected: str):
            if len(args) < n:
                col = (args[-1].col + len(args[-1].text) + 1) if args else head.col + len(head.text) + 1
                raise ProgramSyntaxError(lineno, col, expected, "end of line")
            if len(args) > n:
                raise ProgramSyntaxError(lineno, args[n].col, "end of line", args[n].text)

        if head.text == "c4":
            arity(0, "")
            seen_c4 = True
        elif not seen_c4:
            raise ProgramSyntaxError(lineno, head.col, "'c4'", head.text)
        elif head.text == "vertex":
            if len(args) == 1:
                args.append(_Token("h", 0))
            arity(2, "face id and 'h' or 'v'")
            face = _integer(args[0], lineno, "face id")
            if args[1].text not in ("h", "v"):
                raise ProgramSyntaxError(lineno, args[1].col, "'h' or 'v'", args[1].text)
            p.ops.append(InsertVertex(face, SplitPair(args[1].text)))
        elif head.text == "cycle":
            arity(1, "face id")
            p.ops.append(InsertCycle(_integer(args[0], lineno, "face id")))
        elif head.text == "target":
            arity(2, "face id and ratio")
            p.targets[_integer(args[0], lineno, "face id")] = _rational(args[1], lineno)
        elif head.text == "targets":
            # batch form: targets f1=1/2 f3=2
            if not args:
                raise ProgramSyntaxError(lineno, head.col + 8, "f<face>=<ratio>", "end of line")
            for tok in args:
                key, sep, value = tok.text.partition("=")
                if not sep or not key.startswith("f") or not key[1:].isdigit():
                    raise ProgramSyntaxError(lineno, tok.col, "f<face>=<ratio>", tok.text)
                p.targets[int(key[1:])] = _rational(_Token(value, tok.col + len(key) + 1), lineno)
        elif head.text == "eps":
            arity(1, "tolerance")
            eps = _rational(args[0], lineno)
        else:
            raise ProgramSyntaxError(lineno, head.col, "c4, vertex, cycle, target, targets or eps", head.text)
    if not seen_c4:
        raise ProgramSyntaxError(len(lines) + 1, 1, "'c4'", "end of input")
    if eps is not None:
        p.eps = eps
    if validate:
        problems = validate_program(p)
        if problems:
            raise SemanticError(problems)
    return p


def emit_program(p: BuildProgram) -> str:
    out = [FORMAT_LINE, "c4"]
    for op in p.ops:
        if isinstance(op, InsertVertex):
            out.append(f"vertex {op.face} {op.split_pair.value}")
        else:
            out.append(f"cycle {op.face}")
    for f in sorted(p.targets):
        out.append(f"target {f} {fmt(p.targets[f])}")
    out.append(f"eps {fmt(p.eps)}")
    return "\n".join(out) + "\n"


# ------------------------------------------------------------------- layouts

def emit_layout(scr) -> str:
    out = [FORMAT_LINE]
    fr = scr.frame
    out.append(f"frame {fmt(fr.x)} {fmt(fr.y)} {fmt(fr.width)} {fmt(fr.height)}")
    for v in sorted(scr.squares):
        s = scr.squares[v]
        out.append(f"square {v} {fmt(s.x)} {fmt(s.y)} {fmt(s.side)}")
    for f in sorted(scr.gaps):
        r = scr.gaps[f]
        out.append(f"gap {f} {fmt(r.x)} {fmt(r.y)} {fmt(r.width)} {fmt(r.height)}")
    return "\n".join(out) + "\n"


def parse_layout(text: str):
    from .layout import SCR

    lines = text.splitlines()
    start = _header(lines)
    squares: Dict[int, Square] = {}
    gaps: Dict[int, Rect] = {}
    frame: Optional[Rect] = None
    for lineno, line in enumerate(lines[start:], start=start + 1):
        toks = _tokens(line)
        if not toks:
            continue
        head, args = toks[0], toks[1:]
        want = {"square": 4, "gap": 5, "frame": 4}.get(head.text)
        if want is None:
            raise ProgramSyntaxError(lineno, head.col, "square, gap or frame", head.text)
        if len(args) != want:
            col = args[want].col if len(args) > want else head.col
            raise ProgramSyntaxError(lineno, col, f"{want} fields after {head.text}")
        try:
            if head.text == "square":
                v = _integer(args[0], lineno, "vertex id")
                if v in squares:
                    raise ProgramSyntaxError(lineno, args[0].col, "a new vertex id", args[0].text)
                squares[v] = Square(*(_rational(t, lineno) for t in args[1:]))
            elif head.text == "gap":
                f = _integer(args[0], lineno, "face id")
                if f in gaps:
                    raise ProgramSyntaxError(lineno, args[0].col, "a new face id", args[0].text)
                gaps[f] = Rect(*(_rational(t, lineno) for t in args[1:]))
            else:
                frame = Rect(*(_rational(t, lineno) for t in args))
        except ValueError as exc:
            if isinstance(exc, ProgramSyntaxError):
                raise
            raise ProgramSyntaxError(lineno, args[0].col, "positive sizes", str(exc)) from None
    if frame is None:
        boxes = [s.bounds for s in squares.values()] + [r.bounds for r in gaps.values()]
        if not boxes:
            raise ProgramSyntaxError(len(lines) + 1, 1, "at least one square", "end of input")
        frame = Rect.from_bounds(min(b[0] for b in boxes), min(b[1] for b in boxes),
                                 max(b[2] for b in boxes), max(b[3] for b in boxes))
    return SCR(squares, gaps, frame)


# ------------------------------------------------------------------- reports

def emit_report(report) -> str:
    lines = [FORMAT_LINE]
    for rec in report.records():
        lines.append(json.dumps(rec, sort_keys=True))
    return "\n".join(lines) + "\n"


def certificate(result) -> dict:
    """JSON-ready record of a forcing run."""
    c = result.certified
    return {
        "format": 1,
        "r": fmt(result.r),
        "delta": fmt(result.delta),
        "rotated": result.rotated,
        "certified": [fmt(c.lower), None if c.upper is None else fmt(c.upper)],
        "phases": [{"orientation": p.orientation, "size": p.size} for p in result.phases],
        "intervals": [[fmt(i.lower), None if i.upper is None else fmt(i.upper)] for i in result.intervals],
        "padding": {"per_square": result.padding.per_square, "m": result.padding.m,
                    "ell": fmt(result.padding.ell), "delta": fmt(result.padding.delta)},
    }
