"""Hand-built ring configurations shared by the ring tests."""

from fractions import Fraction as F
import random

from squarecontact.geometry import Square
from squarecontact.ring.config import RingConfig

# clockwise pinwheel around the unit center gap; corner ratios 2, 1/2, 2, 1/2
PINWHEEL = RingConfig(t=Square(-1, 1, 2), r=Square(1, 0, 2), b=Square(0, -2, 2), l=Square(-2, -1, 2))

# r's left corners on t and b; g_br is 1/10 x 1/10 before the slide
SLIDE = RingConfig(t=Square(0, 1, 1), r=Square(1, F(-1, 10), F(6, 5)), b=Square(0, -1, 1), l=Square(-1, 0, 1))

STACKED = RingConfig(t=Square(0, 1, 1), b=Square(0, -1, 1), l=Square(-2, F(-1, 2), 2), r=Square(1, 0, F(3, 2)))

ARROW = RingConfig(t=Square(0, 1, 1), l=Square(F(-3, 2), 0, F(3, 2)), r=Square(1, 0, F(3, 2)), b=Square(F(-1, 2), -2, 2))

NEAR_PINWHEEL = RingConfig(r=Square(1, 0, 1), t=Square(F(-1, 4), 1, F(7, 4)),
                           l=Square(F(-3, 2), F(-1, 2), F(3, 2)), b=Square(0, F(-3, 2), F(3, 2)))


def _between(rng: random.Random, lo: F, hi: F, den: int = 60) -> F:
    """Rational strictly inside (lo, hi)."""
    return lo + (hi - lo) * F(rng.randint(1, den - 1), den)


def random_pinwheel(rng: random.Random) -> RingConfig:
    """Strict clockwise pinwheel with each square pinned at a center-gap corner."""
    w = F(rng.randint(1, 12), rng.randint(1, 6))
    h = F(rng.randint(1, 12), rng.randint(1, 6))
    while True:
        s_t = w + F(rng.randint(1, 30), rng.randint(1, 6))
        s_r = _between(rng, h, h + s_t)
        s_b = _between(rng, w, w + s_r)
        s_l = _between(rng, h, h + s_b)
        if s_t < w + s_l:
            break
    return RingConfig(
        b=Square(0, -s_b, s_b),
        l=Square(-s_l, h - s_l, s_l),
        t=Square(w - s_t, h, s_t),
        r=Square(w, 0, s_r),
    )
