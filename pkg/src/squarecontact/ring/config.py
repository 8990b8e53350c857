"""Four squares around a center gap, with four corner gaps, inside a box R.

Squares are labelled by the side of R they touch (``t``, ``b``, ``l``, ``r``)
and gaps by the corner of R they occupy (``tl``, ``tr``, ``br``, ``bl``) or
``c`` for the center. All gap geometry is derived from the four squares:

    tr = [t.right, r.right] x [r.top, t.top]
    br = [b.right, r.right] x [b.bottom, r.bottom]
    bl = [l.left, b.left]   x [b.bottom, l.bottom]
    tl = [l.left, t.left]   x [l.top, t.top]
    c  = [l.right, r.left]  x [b.top, t.bottom]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Tuple

from ..geometry import (
    DIHEDRAL, Contact, ContactType, Corner, Isometry, Number, Q, Rect, Side,
    Square, classify_bounds, corner_on_side,
)

SQUARES = ("t", "r", "b", "l")
CORNER_GAPS = ("tl", "tr", "br", "bl")
GAPS = CORNER_GAPS + ("c",)
CYCLE = (("t", "r"), ("r", "b"), ("b", "l"), ("l", "t"))

SQUARE_DIR = {"t": (0, 1), "b": (0, -1), "l": (-1, 0), "r": (1, 0)}
GAP_DIR = {"tl": (-1, 1), "tr": (1, 1), "br": (1, -1), "bl": (-1, -1), "c": (0, 0)}
_DIR_SQUARE = {v: k for k, v in SQUARE_DIR.items()}
_DIR_GAP = {v: k for k, v in GAP_DIR.items()}


class RingError(ValueError):
    pass


class NonPositiveInput(RingError):
    pass


class PreconditionViolated(RingError):
    pass


class InadmissibleDirection(RingError):
    pass


class NotPinwheel(RingError):
    pass


class NotStacked(RingError):
    pass


class NotArrow(RingError):
    pass


class NotNearPinwheel(RingError):
    pass


def map_square_label(T: Isometry, label: str) -> str:
    return _DIR_SQUARE[T.direction(SQUARE_DIR[label])]


def map_gap_label(T: Isometry, label: str) -> str:
    return _DIR_GAP[T.direction(GAP_DIR[label])]


def gap_bounds(sq: Mapping[str, Square], gap: str):
    t, r, b, l = sq["t"], sq["r"], sq["b"], sq["l"]
    if gap == "tr":
        return t.right, r.top, r.right, t.top
    if gap == "br":
        return b.right, b.y, r.right, r.y
    if gap == "bl":
        return l.x, b.y, b.x, l.y
    if gap == "tl":
        return l.x, l.top, t.x, t.top
    if gap == "c":
        return l.right, b.top, r.x, t.y
    raise KeyError(gap)


def gap_dims(sq: Mapping[str, Square], gap: str) -> Tuple[Fraction, Fraction]:
    """(width, height) of a gap; may be non-positive for an invalid arrangement."""
    x0, y0, x1, y1 = gap_bounds(sq, gap)
    return x1 - x0, y1 - y0


@dataclass(frozen=True)
class RingTargets:
    c: Fraction
    tl: Fraction
    tr: Fraction
    br: Fraction
    bl: Fraction

    def __post_init__(self):
        for g in GAPS:
            object.__setattr__(self, g, Q(getattr(self, g)))
            if getattr(self, g) <= 0:
                raise NonPositiveInput(f"target for gap {g} must be positive")

    def __getitem__(self, gap: str) -> Fraction:
        return getattr(self, gap)

    def as_dict(self) -> Dict[str, Fraction]:
        return {g: self[g] for g in GAPS}

    def mapped(self, T: Isometry) -> "RingTargets":
        return RingTargets(**{map_gap_label(T, g): T.ratio(v) for g, v in self.as_dict().items()})


@dataclass(frozen=True)
class RingConfig:
    t: Square
    r: Square
    b: Square
    l: Square

    @property
    def squares(self) -> Dict[str, Square]:
        return {"t": self.t, "r": self.r, "b": self.b, "l": self.l}

    def square(self, label: str) -> Square:
        return getattr(self, label)

    def gap(self, label: str) -> Rect:
        return Rect.from_bounds(*gap_bounds(self.squares, label))

    def gap_dims(self, label: str) -> Tuple[Fraction, Fraction]:
        return gap_dims(self.squares, label)

    def ratio(self, label: str) -> Fraction:
        w, h = self.gap_dims(label)
        return h / w

    def ratios(self) -> Dict[str, Fraction]:
        return {g: self.ratio(g) for g in GAPS}

    @property
    def center(self) -> Rect:
        return self.gap("c")

    @property
    def bounding(self) -> Rect:
        return Rect.from_bounds(self.l.x, self.b.y, self.r.right, self.t.top)

    @property
    def bounding_ratio(self) -> Fraction:
        R = self.bounding
        return R.height / R.width

    def contact(self, a: str, b: str) -> Contact:
        return classify_bounds(self.square(a).bounds, self.square(b).bounds)

    def replace(self, **squares: Square) -> "RingConfig":
        data = self.squares
        data.update(squares)
        return RingConfig(**data)

    def transformed(self, T: Isometry) -> "RingConfig":
        return RingConfig(**{map_square_label(T, k): T.square(s) for k, s in self.squares.items()})

    def scaled_into(self, target: Rect) -> "RingConfig":
        """Similarity copy whose bounding box is ``target`` (ratios must already agree)."""
        R = self.bounding
        k = target.width / R.width
        if R.height * k != target.height:
            raise RingError("bounding ratio does not match the target rectangle")

        def f(s: Square) -> Square:
            return Square(target.x + (s.x - R.x) * k, target.y + (s.y - R.y) * k, s.side * k)

        return RingConfig(**{k_: f(s) for k_, s in self.squares.items()})


def ring_problems(c: RingConfig) -> List[str]:
    """Exact structural check; empty list for a valid four-square ring."""
    problems = []
    sq = c.squares
    for g in GAPS:
        w, h = gap_dims(sq, g)
        if w <= 0 or h <= 0:
            problems.append(f"gap {g} is degenerate ({w} x {h})")
    if problems:
        return problems
    for a, b in combinations(SQUARES, 2):
        kind = c.contact(a, b).kind
        cyclic = (a, b) in CYCLE or (b, a) in CYCLE
        if kind is ContactType.OVERLAP:
            problems.append(f"squares {a},{b} overlap")
        elif cyclic and kind is ContactType.DISJOINT:
            problems.append(f"squares {a},{b} do not touch")
        elif not cyclic and kind is not ContactType.DISJOINT:
            problems.append(f"opposite squares {a},{b} touch")
    gaps = {g: gap_bounds(sq, g) for g in GAPS}
    for g, gb in gaps.items():
        for k, s in sq.items():
            if classify_bounds(gb, s.bounds).kind is ContactType.OVERLAP:
                problems.append(f"gap {g} overlaps square {k}")
    for g1, g2 in combinations(GAPS, 2):
        if classify_bounds(gaps[g1], gaps[g2]).kind is ContactType.OVERLAP:
            problems.append(f"gaps {g1},{g2} overlap")
    R = c.bounding
    area = sum(s.area for s in sq.values()) + sum((x1 - x0) * (y1 - y0) for x0, y0, x1, y1 in gaps.values())
    if area != R.area:
        problems.append(f"pieces cover area {area}, bounding box has {R.area}")
    for k, s in sq.items():
        x0, y0, x1, y1 = s.bounds
        if x0 < R.x or y0 < R.y or x1 > R.right or y1 > R.top:
            problems.append(f"square {k} leaves the bounding box")
    return problems


def check_ring(c: RingConfig, context: str = "") -> RingConfig:
    problems = ring_problems(c)
    if problems:
        raise AssertionError(f"invalid ring configuration {context}: {problems}; state={c}")
    return c


def initial_config(alpha_c: Number, center_width: Number = 1) -> RingConfig:
    """Center gap of ratio ``alpha_c`` with each square as long as the gap side it touches."""
    a, w = Q(alpha_c), Q(center_width)
    if a <= 0 or w <= 0:
        raise NonPositiveInput("alpha_c and center_width must be positive")
    h = a * w
    # center gap [0, w] x [0, h]
    return RingConfig(
        t=Square(0, h, w),
        b=Square(0, -w, w),
        l=Square(-h, 0, h),
        r=Square(w, 0, h),
    )


# canonical corner-on-side patterns; see classify_config
_PINWHEEL = {
    "tr": ("t", Corner.BR, "r", Side.LEFT),
    "rb": ("r", Corner.BL, "b", Side.TOP),
    "bl": ("b", Corner.TL, "l", Side.RIGHT),
    "lt": ("l", Corner.TR, "t", Side.BOTTOM),
}
_REVERSED = {
    "tr": ("r", Corner.TL, "t", Side.BOTTOM),
    "rb": ("b", Corner.TR, "r", Side.LEFT),
    "bl": ("l", Corner.BR, "b", Side.TOP),
    "lt": ("t", Corner.BL, "l", Side.RIGHT),
}
_STACKED = (("b", Corner.TR, "r", Side.LEFT), ("b", Corner.TL, "l", Side.RIGHT),
            ("t", Corner.BR, "r", Side.LEFT), ("t", Corner.BL, "l", Side.RIGHT))
_ARROW = (("b", Corner.TR, "r", Side.BOTTOM), ("b", Corner.TL, "l", Side.BOTTOM),
          ("t", Corner.BR, "r", Side.LEFT), ("t", Corner.BL, "l", Side.RIGHT))


def _holds(c: RingConfig, conditions) -> bool:
    return all(corner_on_side(c.square(a), k, c.square(b), s) for a, k, b, s in conditions)


def is_cw_pinwheel(c: RingConfig) -> bool:
    return _holds(c, _PINWHEEL.values())


def is_vertical_stacked(c: RingConfig) -> bool:
    return _holds(c, _STACKED)


def is_downward_arrow(c: RingConfig) -> bool:
    return _holds(c, _ARROW)


def is_cw_near_pinwheel(c: RingConfig, reversed_pair: str = "tr") -> bool:
    conds = [_REVERSED[p] if p == reversed_pair else cond for p, cond in _PINWHEEL.items()]
    return _holds(c, conds)


def is_initial(c: RingConfig) -> bool:
    C = c.center
    return (c.t.side == C.width == c.b.side and c.l.side == C.height == c.r.side
            and c.t.x == C.x == c.b.x and c.l.y == C.y == c.r.y)


@dataclass(frozen=True)
class ConfigClass:
    kind: str  # initial | pinwheel | stacked | arrow | near_pinwheel | general
    chirality: Optional[str] = None  # cw | ccw
    orientation: Optional[str] = None  # vertical | horizontal
    direction: Optional[str] = None  # down | up | left | right
    directional_square: Optional[str] = None
    reversed_contact: Optional[Tuple[str, str]] = None


_DIR_NAME = {(0, -1): "down", (0, 1): "up", (-1, 0): "left", (1, 0): "right"}


def _det(T: Isometry) -> int:
    return T.a * T.d - T.b * T.c


def classify_config(c: RingConfig) -> ConfigClass:
    """First matching class; the initial arrangement is recognised before the pinwheel
    it also satisfies (all its contacts are corner points)."""
    if is_initial(c):
        return ConfigClass("initial")
    frames = [(T, c.transformed(T)) for T in DIHEDRAL]
    for T, cc in frames:
        if is_cw_pinwheel(cc):
            return ConfigClass("pinwheel", chirality="cw" if _det(T) > 0 else "ccw")
    for T, cc in frames:
        if is_vertical_stacked(cc):
            return ConfigClass("stacked", orientation="horizontal" if T.swaps_axes else "vertical")
    for T, cc in frames:
        if is_downward_arrow(cc):
            back = T.inverse
            return ConfigClass("arrow", direction=_DIR_NAME[back.direction((0, -1))],
                               directional_square=map_square_label(back, "b"))
    for T, cc in frames:
        for pair in _PINWHEEL:
            if is_cw_near_pinwheel(cc, pair):
                back = T.inverse
                a, b = pair[0], pair[1]
                return ConfigClass("near_pinwheel", chirality="cw" if _det(T) > 0 else "ccw",
                                   reversed_contact=(map_square_label(back, a),
                                                     map_square_label(back, b)))
    return ConfigClass("general")
