"""Exact axis-aligned geometry: squares, rectangles, contacts and isometries.

Every coordinate is a :class:`fractions.Fraction`; nothing in this module
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

Scalar = Fraction
Number = Union[int, str, Fraction]
Point = Tuple[Fraction, Fraction]


class GeometryError(ValueError):
    pass


class NonPositiveSide(GeometryError):
    pass


def Q(value: Number) -> Fraction:
    """Coerce ints, ``"p/q"`` strings and Fractions to an exact Fraction."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or 'p/q' string")
    return Fraction(value)


class Corner(Enum):
    TL = (-1, 1)
    TR = (1, 1)
    BL = (-1, -1)
    BR = (1, -1)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]

    @classmethod
    def from_direction(cls, dx: int, dy: int) -> "Corner":
        return cls((dx, dy))


@dataclass(frozen=True)
class Rect:
    x: Fraction
    y: Fraction
    width: Fraction
    height: Fraction

    def __post_init__(self):
        for name in ("x", "y", "width", "height"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        if self.width <= 0 or self.height <= 0:
            raise GeometryError(f"degenerate rectangle {self.width}x{self.height}")

    @property
    def right(self) -> Fraction:
        return self.x + self.width

    @property
    def top(self) -> Fraction:
        return self.y + self.height

    @property
    def bounds(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.x, self.y, self.right, self.top

    @property
    def area(self) -> Fraction:
        return self.width * self.height

    @classmethod
    def from_bounds(cls, x0, y0, x1, y1) -> "Rect":
        return cls(x0, y0, Q(x1) - Q(x0), Q(y1) - Q(y0))


@dataclass(frozen=True)
class Square:
    x: Fraction
    y: Fraction
    side: Fraction

    def __post_init__(self):
        for name in ("x", "y", "side"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        if self.side <= 0:
            raise NonPositiveSide(f"square side must be positive, got {self.side}")

    @property
    def right(self) -> Fraction:
        return self.x + self.side

    @property
    def top(self) -> Fraction:
        return self.y + self.side

    @property
    def bounds(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.x, self.y, self.right, self.top

    @property
    def area(self) -> Fraction:
        return self.side * self.side

    @property
    def width(self) -> Fraction:
        return self.side

    height = width

    def corner(self, corner: Corner) -> Point:
        return (self.right if corner.dx > 0 else self.x,
                self.top if corner.dy > 0 else self.y)

    def translated(self, dx: Number = 0, dy: Number = 0) -> "Square":
        return Square(self.x + Q(dx), self.y + Q(dy), self.side)


def aspect_ratio(r: Rect) -> Fraction:
    return r.height / r.width


def scale_from_corner(s: Square, corner: Corner, delta: Number) -> Square:
    """Grow (or shrink, for negative ``delta``) ``s`` keeping ``corner`` fixed."""
    delta = Q(delta)
    side = s.side + delta
    if side <= 0:
        raise NonPositiveSide(f"side {s.side} + {delta} is not positive")
    x = s.x - delta if corner.dx > 0 else s.x
    y = s.y - delta if corner.dy > 0 else s.y
    return Square(x, y, side)


class ContactType(Enum):
    DISJOINT = "disjoint"
    POINT = "point"
    PROPER = "proper"
    OVERLAP = "overlap"


@dataclass(frozen=True)
class Contact:
    kind: ContactType
    point: Optional[Point] = None
    # axis of the shared segment: "vertical" means both boxes meet along x = const
    axis: Optional[str] = None
    length: Optional[Fraction] = None

    @property
    def touching(self) -> bool:
        return self.kind in (ContactType.POINT, ContactType.PROPER)


def classify_bounds(a, b) -> Contact:
    """Classify the intersection of two closed boxes given as (x0, y0, x1, y1)."""
    ax0, ay0, ax1, ay1 = a
    bx0, by0, bx1, by1 = b
    ix = min(ax1, bx1) - max(ax0, bx0)
    iy = min(ay1, by1) - max(ay0, by0)
    if ix < 0 or iy < 0:
        return Contact(ContactType.DISJOINT)
    if ix > 0 and iy > 0:
        return Contact(ContactType.OVERLAP)
    if ix == 0 and iy == 0:
        return Contact(ContactType.POINT, point=(max(ax0, bx0), max(ay0, by0)))
    if ix == 0:
        return Contact(ContactType.PROPER, axis="vertical", length=iy)
    return Contact(ContactType.PROPER, axis="horizontal", length=ix)


def classify_contact(a, b) -> Contact:
    return classify_bounds(a.bounds, b.bounds)


def point_on_segment(p: Point, a: Point, b: Point) -> bool:
    """Exact incidence of ``p`` on an axis-parallel closed segment ``ab``."""
    (px, py), (ax, ay), (bx, by) = p, a, b
    if ax == bx:
        return px == ax and min(ay, by) <= py <= max(ay, by)
    if ay == by:
        return py == ay and min(ax, bx) <= px <= max(ax, bx)
    raise GeometryError("segment is not axis-parallel")


class Side(Enum):
    TOP = (0, 1)
    BOTTOM = (0, -1)
    LEFT = (-1, 0)
    RIGHT = (1, 0)


def side_segment(s: Square, side: Side) -> Tuple[Point, Point]:
    x0, y0, x1, y1 = s.bounds
    return {
        Side.TOP: ((x0, y1), (x1, y1)),
        Side.BOTTOM: ((x0, y0), (x1, y0)),
        Side.LEFT: ((x0, y0), (x0, y1)),
        Side.RIGHT: ((x1, y0), (x1, y1)),
    }[side]


def corner_on_side(a: Square, corner: Corner, b: Square, side: Side) -> bool:
    """True when ``corner`` of ``a`` lies on ``side`` of ``b``."""
    return point_on_segment(a.corner(corner), *side_segment(b, side))


@dataclass(frozen=True)
class Isometry:
    """An element of the dihedral group of the square, as an integer matrix.

    Maps (x, y) to (a*x + b*y, c*x + d*y). Rotations by 90 degrees swap the
    axes and therefore invert every aspect ratio.
    """

    a: int
    b: int
    c: int
    d: int

    def point(self, p: Point) -> Point:
        x, y = p
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def direction(self, v: Tuple[int, int]) -> Tuple[int, int]:
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    @property
    def swaps_axes(self) -> bool:
        return self.a == 0

    @property
    def inverse(self) -> "Isometry":
        return Isometry(self.a, self.c, self.b, self.d)

    def then(self, other: "Isometry") -> "Isometry":
        """Apply ``self`` first, then ``other``."""
        o = other
        return Isometry(o.a * self.a + o.b * self.c, o.a * self.b + o.b * self.d,
                        o.c * self.a + o.d * self.c, o.c * self.b + o.d * self.d)

    def _box(self, bounds):
        x0, y0, x1, y1 = bounds
        p = self.point((x0, y0))
        q = self.point((x1, y1))
        return min(p[0], q[0]), min(p[1], q[1]), max(p[0], q[0]), max(p[1], q[1])

    def square(self, s: Square) -> Square:
        x0, y0, _, _ = self._box(s.bounds)
        return Square(x0, y0, s.side)

    def rect(self, r: Rect) -> Rect:
        return Rect.from_bounds(*self._box(r.bounds))

    def ratio(self, value: Number) -> Fraction:
        value = Q(value)
        return 1 / value if self.swaps_axes else value

    def corner(self, c: Corner) -> Corner:
        return Corner.from_direction(*self.direction(c.value))


IDENTITY = Isometry(1, 0, 0, 1)
ROT90 = Isometry(0, -1, 1, 0)  # counterclockwise
ROT180 = Isometry(-1, 0, 0, -1)
ROT270 = Isometry(0, 1, -1, 0)
FLIP_X = Isometry(-1, 0, 0, 1)  # mirror left/right
FLIP_Y = Isometry(1, 0, 0, -1)  # mirror top/bottom
FLIP_DIAG = Isometry(0, 1, 1, 0)  # (x, y) -> (y, x)
FLIP_ANTI = Isometry(0, -1, -1, 0)  # (x, y) -> (-y, -x)

DIHEDRAL = (IDENTITY, FLIP_X, FLIP_Y, ROT180, ROT90, ROT270, FLIP_DIAG, FLIP_ANTI)
