"""One-parameter transformations of a ring configuration.

Every transformation moves the squares affinely in a single parameter ``d``:
compensating amounts are proportional to ``d`` with constants taken from the
starting configuration. Gap heights and widths are then affine in ``d``, so
"run until a ratio hits its target or a contact shrinks to a point" is the
smallest non-negative root of a handful of linear equations, solved exactly.

Each motion is written once in a canonical orientation; the public functions
find an isometry that maps the caller's situation onto it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, NamedTuple, Optional, Tuple

from ..geometry import DIHEDRAL, ContactType, Corner, Number, Q, Square
from .config import (
    InadmissibleDirection, NotArrow, NotNearPinwheel, NotPinwheel, NotStacked,
    PreconditionViolated, RingConfig, RingError, check_ring, gap_dims,
    is_cw_near_pinwheel, is_cw_pinwheel, is_downward_arrow, is_vertical_stacked,
    map_gap_label, map_square_label,
)

Velocity = Dict[str, Tuple[Fraction, Fraction, Fraction]]


class _Raw(NamedTuple):
    x: Fraction
    y: Fraction
    side: Fraction

    @property
    def right(self):
        return self.x + self.side

    @property
    def top(self):
        return self.y + self.side


def scale_velocity(corner: Corner, k: Number = 1) -> Tuple[Fraction, Fraction, Fraction]:
    k = Q(k)
    return (-k if corner.dx > 0 else Fraction(0), -k if corner.dy > 0 else Fraction(0), k)


def _add(*vels) -> Tuple[Fraction, Fraction, Fraction]:
    return tuple(sum((v[i] for v in vels), Fraction(0)) for i in range(3))


def _raw(c: RingConfig, vel: Velocity, d: Fraction) -> Dict[str, _Raw]:
    out = {}
    for k, s in c.squares.items():
        vx, vy, vs = vel.get(k, (0, 0, 0))
        out[k] = _Raw(s.x + d * vx, s.y + d * vy, s.side + d * vs)
    return out


def advance(c: RingConfig, vel: Velocity, d: Number) -> RingConfig:
    d = Q(d)
    return RingConfig(**{k: Square(*v) for k, v in _raw(c, vel, d).items()})


def _affine(f, c: RingConfig, vel: Velocity) -> Tuple[Fraction, Fraction]:
    f0 = f(_raw(c, vel, Fraction(0)))
    return f0, f(_raw(c, vel, Fraction(1))) - f0


def gap_excess(gap: str, gamma: Fraction) -> Callable:
    """height - gamma * width: zero exactly when the gap has ratio gamma."""
    def f(sq):
        w, h = gap_dims(sq, gap)
        return h - gamma * w
    return f


@dataclass(frozen=True)
class Step:
    name: str
    d: Fraction
    stop: str  # "target" or the name of the contact that degenerated


def run_motion(c: RingConfig, vel: Velocity, target: Optional[Tuple[str, Fraction]] = None,
               events: Optional[Dict[str, Callable]] = None, name: str = "") -> Tuple[RingConfig, Step]:
    """Advance until the target ratio is met or an event quantity drops to zero.

    Event quantities must be non-negative at ``d = 0``; they stop the motion
    when they would turn negative.
    """
    best: Optional[Tuple[Fraction, int, str]] = None
    if target is not None:
        g0, slope = _affine(gap_excess(*target), c, vel)
        if g0 == 0:
            best = (Fraction(0), 0, "target")
        elif slope != 0 and -g0 / slope > 0:
            best = (-g0 / slope, 0, "target")
    for i, (ename, f) in enumerate((events or {}).items(), start=1):
        f0, slope = _affine(f, c, vel)
        if f0 < 0:
            raise PreconditionViolated(f"{name}: event {ename} already negative ({f0})")
        if slope < 0:
            cand = (f0 / -slope, i, ename)
            if best is None or cand[:2] < best[:2]:
                best = cand
    if best is None:
        raise RingError(f"{name}: motion never reaches its target")
    d, _, stop = best
    return advance(c, vel, d), Step(name, d, stop)


def _frames(c: RingConfig):
    for T in DIHEDRAL:
        yield T, c.transformed(T)


# ---------------------------------------------------------------- slide-scale

def _slide_scale_canonical(c: RingConfig, gamma: Fraction) -> Tuple[RingConfig, Step]:
    """Slide s_r up, growing it from its bottom-left corner so g_br is kept; g_tr falls."""
    t, r, b = c.t, c.r, c.b
    if not (r.x == t.right == b.right and t.y <= r.top <= t.top and b.y <= r.y <= b.top):
        raise PreconditionViolated("s_r's left corners must lie on the right sides of s_t and s_b")
    current = c.ratio("tr")
    if gamma == current:
        return c, Step("slide_scale", Fraction(0), "target")
    if gamma > current:
        raise InadmissibleDirection(f"slide-scale only lowers g_tr ({current} -> {gamma})")
    w, h1 = c.gap_dims("br")
    vel = {"r": _add((0, 1, 0), scale_velocity(Corner.BL, w / h1))}
    events = {"r-b contact": lambda sq: sq["b"].top - sq["r"].y}
    return run_motion(c, vel, ("tr", gamma), events, "slide_scale")


def slide_scale(c: RingConfig, moving: str, preserve: str, target: str,
                gamma: Number) -> Tuple[RingConfig, Step]:
    """Slide ``moving`` away from ``preserve`` while growing it so ``preserve`` keeps its ratio.

    Stops when ``target`` reaches ``gamma`` or the trailing contact becomes a
    point; the returned step says which happened.
    """
    gamma = Q(gamma)
    for T in DIHEDRAL:
        if (map_square_label(T, moving), map_gap_label(T, preserve), map_gap_label(T, target)) == ("r", "br", "tr"):
            out, step = _slide_scale_canonical(c.transformed(T), T.ratio(gamma))
            return check_ring(out.transformed(T.inverse), "after slide_scale"), step
    raise PreconditionViolated(f"no slide-scale moves {moving} between gaps {preserve} and {target}")


# ----------------------------------------------------------------- pinwheel

def pinwheel_chain(c: RingConfig, d1: Number = 1) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """Growth of s_b, s_l, s_t, s_r in a clockwise pinwheel that keeps g_bl, g_tl, g_tr."""
    d1 = Q(d1)
    w, h = c.gap_dims("c")
    d2 = d1 * c.l.side / (c.b.side + h)
    d3 = d2 * c.t.side / (c.l.side + w)
    d4 = d3 * c.r.side / (c.t.side + h)
    return d1, d2, d3, d4


def _pinwheel_canonical(c: RingConfig, gamma: Fraction) -> Tuple[RingConfig, Step]:
    if gamma == c.ratio("br"):
        return c, Step("pinwheel", Fraction(0), "target")
    _, k2, k3, k4 = pinwheel_chain(c, 1)
    vel = {
        "b": scale_velocity(Corner.TL, 1),
        "l": scale_velocity(Corner.TR, k2),
        "t": scale_velocity(Corner.BR, k3),
        "r": scale_velocity(Corner.BL, k4),
    }
    return run_motion(c, vel, ("br", gamma), None, "pinwheel")


def _dispatch(c: RingConfig, gap: str, gamma: Fraction, predicate, not_error, label, body):
    """Run ``body`` in the first frame where ``predicate`` holds, ``gap`` maps to br and grows."""
    if gamma <= 0:
        raise RingError("target ratio must be positive")
    if gamma == c.ratio(gap):
        return c, []
    matched = False
    for T, cc in _frames(c):
        if not predicate(cc):
            continue
        matched = True
        if map_gap_label(T, gap) != "br":
            continue
        g = T.ratio(gamma)
        if g <= cc.ratio("br"):
            continue
        out, steps = body(cc, g)
        return check_ring(out.transformed(T.inverse), f"after {label}"), steps
    if not matched:
        raise not_error(f"configuration is not a {label}")
    raise InadmissibleDirection(f"{label}: gap {gap} cannot move to {gamma}")


def resolve_pinwheel(c: RingConfig, gap: str, gamma: Number) -> RingConfig:
    """Move one corner gap of a pinwheel to ratio ``gamma`` keeping the other four ratios.

    Clockwise: g_br and g_tl may grow, g_tr and g_bl may shrink; mirrored for
    counterclockwise.
    """
    return resolve_pinwheel_steps(c, gap, gamma)[0]


def resolve_pinwheel_steps(c, gap, gamma):
    def body(cc, g):
        out, step = _pinwheel_canonical(cc, g)
        return out, [step]
    return _dispatch(c, gap, Q(gamma), is_cw_pinwheel, NotPinwheel, "pinwheel", body)


# ------------------------------------------------------------------ stacked

def _lower_left_follow(c: RingConfig) -> Velocity:
    """s_b grows from its top-left corner; s_l slides down and grows from its top-right
    corner so that both g_bl and g_tl stay fixed."""
    w_tl, h_tl = c.gap_dims("tl")
    w_bl, h_bl = c.gap_dims("bl")
    k = w_tl / h_tl
    k2 = 1 / (1 + k + (h_bl / w_bl) * k)
    return {
        "b": scale_velocity(Corner.TL, 1),
        "l": _add((0, -k2, 0), scale_velocity(Corner.TR, k * k2)),
    }


def _l_t_gap(sq) -> Fraction:
    return sq["l"].top - sq["t"].y


def _stacked_canonical(c: RingConfig, gamma: Fraction):
    steps = []
    if c.contact("l", "t").kind is not ContactType.POINT:
        c, step = run_motion(c, _lower_left_follow(c), ("br", gamma),
                             {"l-t contact": _l_t_gap}, "stacked")
        steps.append(step)
        if step.stop == "target":
            return c, steps
    if not is_cw_pinwheel(c):
        raise AssertionError(f"stacked resolution did not reach a pinwheel: {c}")
    c, step = _pinwheel_canonical(c, gamma)
    return c, steps + [step]


def _stacked_ready(cc: RingConfig) -> bool:
    return is_vertical_stacked(cc) and cc.contact("r", "b").kind is ContactType.POINT


def resolve_stacked(c: RingConfig, gap: str, gamma: Number) -> RingConfig:
    """Change the gap between the point-touching pair of a stacked configuration.

    Vertical stacks let that gap's ratio grow, horizontal stacks let it shrink.
    """
    return resolve_stacked_steps(c, gap, gamma)[0]


def resolve_stacked_steps(c, gap, gamma):
    return _dispatch(c, gap, Q(gamma), _stacked_ready, NotStacked, "stacked configuration",
                     _stacked_canonical)


# -------------------------------------------------------------------- arrow

def _arrow_canonical(c: RingConfig, gamma: Fraction):
    steps = []
    if c.contact("b", "l").kind is not ContactType.POINT:
        w_bl, h_bl = c.gap_dims("bl")
        vel = {"b": _add((1, 0, 0), scale_velocity(Corner.TL, h_bl / w_bl))}
        c, step = run_motion(c, vel, ("br", gamma),
                             {"b-l contact": lambda sq: sq["l"].right - sq["b"].x}, "arrow/translate")
        steps.append(step)
        if step.stop == "target":
            return c, steps
    if c.contact("l", "t").kind is not ContactType.POINT:
        c, step = run_motion(c, _lower_left_follow(c), ("br", gamma),
                             {"l-t contact": _l_t_gap}, "arrow/follow")
        steps.append(step)
        if step.stop == "target":
            return c, steps
    if not is_cw_pinwheel(c):
        raise AssertionError(f"arrow resolution did not reach a pinwheel: {c}")
    c, step = _pinwheel_canonical(c, gamma)
    return c, steps + [step]


def resolve_arrow(c: RingConfig, gap: str, gamma: Number) -> RingConfig:
    """Change the gap beside the directional square of an arrow configuration.

    Up/down arrows let it grow, left/right arrows let it shrink.
    """
    return resolve_arrow_steps(c, gap, gamma)[0]


def resolve_arrow_steps(c, gap, gamma):
    return _dispatch(c, gap, Q(gamma), is_downward_arrow, NotArrow, "arrow configuration",
                     _arrow_canonical)


# ------------------------------------------------------------ near-pinwheel

def _near_pinwheel_canonical(c: RingConfig, gamma: Fraction):
    w_bl, h_bl = c.gap_dims("bl")
    k2 = w_bl / (w_bl + h_bl)
    g_tl, g_tr = c.ratio("tl"), c.ratio("tr")
    s = g_tl * k2 / (1 + g_tl + g_tl / g_tr)
    x = s * (1 + 1 / g_tr)
    vel = {
        "b": scale_velocity(Corner.TL, 1),
        "l": scale_velocity(Corner.TR, k2),
        "t": _add((-x, 0, 0), scale_velocity(Corner.BL, s)),
    }
    c, step = run_motion(c, vel, ("br", gamma),
                         {"t-r contact": lambda sq: sq["t"].right - sq["r"].x}, "near_pinwheel")
    if step.stop == "target":
        return c, [step]
    if not is_cw_pinwheel(c):
        raise AssertionError(f"near-pinwheel resolution did not reach a pinwheel: {c}")
    c, last = _pinwheel_canonical(c, gamma)
    return c, [step, last]


def resolve_near_pinwheel(c: RingConfig, gamma: Number, gap: Optional[str] = None) -> RingConfig:
    """Change the corner gap that follows the reversed contact in the near-pinwheel's
    rotational direction. ``gap`` disambiguates when several readings apply."""
    return resolve_near_pinwheel_steps(c, gamma, gap)[0]


def resolve_near_pinwheel_steps(c, gamma, gap=None):
    gamma = Q(gamma)
    predicate = lambda cc: is_cw_near_pinwheel(cc, "tr")
    if gap is None:
        candidates = [map_gap_label(T.inverse, "br") for T, cc in _frames(c) if predicate(cc)]
        if not candidates:
            raise NotNearPinwheel("configuration is not a near-pinwheel")
        gap = candidates[0]
    return _dispatch(c, gap, gamma, predicate, NotNearPinwheel, "near-pinwheel",
                     _near_pinwheel_canonical)
