"""Building a ring with prescribed gap ratios, then loosening it into proper contacts.

``subdivide_ring`` follows the case analysis: start from the initial
arrangement, turn it so the top-right gap is the one that most needs to widen,
fix the right-hand gaps with ``s_r`` (and ``s_b``), then finish the left-hand
gaps with one of four strategies. Everything is exact.

``properize`` then scales squares a little to turn point contacts into proper
ones and certifies a slack ``delta`` on the bounding ratio: for any ratio within
``delta`` of the returned one, ``fit_ring`` produces a ring in a box of that
ratio whose gaps all stay within ``eps`` of their targets.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Dict, List, NamedTuple, Optional, Tuple

from ..geometry import DIHEDRAL, FLIP_Y, ContactType, Corner, Isometry, Number, Q, Rect
from .config import (
    CORNER_GAPS, CYCLE, GAPS, NonPositiveInput, RingConfig, RingError, RingTargets,
    check_ring, initial_config, ring_problems,
)
from .moves import (
    Step, _raw, advance, resolve_arrow_steps, resolve_near_pinwheel_steps,
    resolve_pinwheel_steps, resolve_stacked_steps, run_motion, scale_velocity, slide_scale,
)

MAX_TRANSFORMATIONS = 10


class _Trace:
    """Current configuration in a working frame plus the transformations applied so far."""

    def __init__(self, c: RingConfig, targets: RingTargets, frame: Isometry):
        self.c, self.t, self.frame = c, targets, frame
        self.steps: List[str] = []

    def reflect(self, T: Isometry):
        self.c = self.c.transformed(T)
        self.t = self.t.mapped(T)
        self.frame = self.frame.then(T)
        self.steps.append(f"reflect {T}")

    def record(self, label: str):
        self.steps.append(label)
        if len(self.steps) > MAX_TRANSFORMATIONS:
            raise AssertionError(f"ring construction exceeded {MAX_TRANSFORMATIONS} steps: {self.steps}")
        check_ring(self.c, f"after {label}")

    def scale_until(self, square: str, corner: Corner, gap: str):
        gamma = self.t[gap]
        if self.c.ratio(gap) == gamma:
            return
        try:
            self.c, _ = run_motion(self.c, {square: scale_velocity(corner)}, (gap, gamma),
                                   name=f"scale {square} from {corner.name}")
        except RingError as exc:
            raise AssertionError(f"scaling {square} cannot reach g_{gap}={gamma}: {exc}; state={self.c}")
        self.record(f"scale {square} from {corner.name} -> g_{gap}")

    def slide(self, moving: str, preserve: str, target: str) -> Step:
        self.c, step = slide_scale(self.c, moving, preserve, target, self.t[target])
        self.record(f"slide-scale {moving} -> g_{target} ({step.stop})")
        return step

    def resolve(self, label: str, fn, *args):
        self.c, steps = fn(self.c, *args)
        self.record(f"{label} ({len(steps)} motions)")

    def need(self, gap: str) -> int:
        """-1 if the gap must get wider (ratio down), +1 narrower, 0 when done."""
        g, a = self.c.ratio(gap), self.t[gap]
        return (a > g) - (a < g)


def _initial_frame(targets: RingTargets) -> Isometry:
    """Frame in which the top-right gap has the largest (current / target) excess."""
    best, best_T = None, None
    for T in DIHEDRAL:
        m = targets.mapped(T)
        score = (1 / m.c) / m.tr
        if best is None or score > best:
            best, best_T = score, T
    return best_T


def subdivide_ring(targets: RingTargets, center_width: Number = 1) -> Tuple[RingConfig, Fraction]:
    """Ring whose five gap ratios equal ``targets`` exactly; also returns the bounding ratio.

    Neighbouring squares may meet in single points.
    """
    return subdivide_ring_traced(targets, center_width)[:2]


def subdivide_ring_traced(targets: RingTargets, center_width: Number = 1):
    w = Q(center_width)
    if w <= 0:
        raise NonPositiveInput("center_width must be positive")
    c, lam, steps = _subdivide_unit(targets)
    k = w / c.center.width
    if k != 1:
        B = c.bounding
        c = c.scaled_into(Rect(B.x * k, B.y * k, B.width * k, B.height * k))
    return c, lam, steps


def _subdivide_unit(targets: RingTargets):
    center_width = 1
    inv = 1 / targets.c
    if all(targets[g] == inv for g in CORNER_GAPS):
        c = check_ring(initial_config(targets.c, center_width))
        return c, c.bounding_ratio, []

    T0 = _initial_frame(targets)
    t0 = targets.mapped(T0)
    tr = _Trace(initial_config(t0.c, center_width), t0, T0)
    tr.steps.append(f"align {T0}")
    inv = 1 / t0.c

    # right-hand gaps
    tr.scale_until("r", Corner.BL, "tr")
    b_scaled = False
    if tr.need("br") < 0:
        step = tr.slide("r", "tr", "br")
        assert step.stop == "target", f"slide of s_r stopped early: {tr.c}"
    elif tr.need("br") > 0:
        tr.scale_until("b", Corner.TL, "br")
        b_scaled = True

    a = tr.t
    if not b_scaled and (a.bl <= inv or a.tl <= inv):
        _case_one(tr)
    elif b_scaled and a.bl <= a.tl and a.bl <= inv:
        _case_two(tr)
    elif b_scaled and a.tl <= a.bl and a.tl <= inv:
        _case_three(tr)
    elif a.tl > inv and a.bl > inv:
        _case_four(tr)
    else:
        raise AssertionError(f"no case applies: targets={a}, state={tr.c}")

    c = tr.c
    for g in GAPS:
        if c.ratio(g) != tr.t[g]:
            raise AssertionError(f"gap {g} ended at {c.ratio(g)}, wanted {tr.t[g]}; steps={tr.steps}")
    out = check_ring(c.transformed(tr.frame.inverse), "final")
    return out, out.bounding_ratio, tr.steps


def _case_one(tr: _Trace):
    if tr.t.bl > tr.t.tl:
        tr.reflect(FLIP_Y)
    tr.scale_until("l", Corner.TR, "bl")
    if tr.need("tl") < 0:
        step = tr.slide("l", "bl", "tl")
        assert step.stop == "target", f"slide of s_l stopped early: {tr.c}"
    elif tr.need("tl") > 0:
        # s_t and s_b sit between s_l and s_r; s_l meets s_t in a point
        tr.resolve("stacked", resolve_stacked_steps, "tl", tr.t.tl)


def _case_two(tr: _Trace):
    tr.scale_until("l", Corner.TR, "bl")
    if tr.need("tl") < 0:
        step = tr.slide("l", "bl", "tl")
        assert step.stop == "target", f"slide of s_l stopped early: {tr.c}"
    elif tr.need("tl") > 0:
        tr.resolve("pinwheel", resolve_pinwheel_steps, "tl", tr.t.tl)


def _case_three(tr: _Trace):
    tr.scale_until("l", Corner.BR, "tl")
    if tr.need("bl") < 0:
        step = tr.slide("l", "tl", "bl")
        if step.stop != "target":
            tr.resolve("pinwheel", resolve_pinwheel_steps, "bl", tr.t.bl)
    elif tr.need("bl") > 0:
        tr.resolve("arrow", resolve_arrow_steps, "bl", tr.t.bl)


def _case_four(tr: _Trace):
    c = tr.c
    if tr.need("bl") < 0:
        # s_b overshot while fixing g_br; pull g_bl back with s_l, then g_tl must rise
        _case_two(tr)
        return
    if c.b.right > c.r.x and c.b.top == c.r.y:
        # top-right corner of s_b is under s_r
        step = tr.slide("b", "br", "bl")
        if step.stop == "target":
            if tr.need("tl") != 0:
                tr.resolve("near-pinwheel", resolve_near_pinwheel_steps, tr.t.tl, "tl")
            return
    tr.scale_until("t", Corner.BR, "tl")
    tr.scale_until("b", Corner.TR, "bl")

    def widening(gap):
        w, h = tr.c.gap_dims(gap)
        return h / tr.t[gap] - w

    if widening("tr") > widening("br"):
        tr.reflect(FLIP_Y)
    tr.scale_until("r", Corner.BL, "tr")
    if tr.need("br") != 0:
        tr.resolve("arrow", resolve_arrow_steps, "br", tr.t.br)


# ------------------------------------------------------------------ properize

class ProperRing(NamedTuple):
    config: RingConfig
    lam: Fraction
    delta: Fraction


def _max_deviation(c: RingConfig, targets: RingTargets) -> Fraction:
    return max(abs(c.ratio(g) - targets[g]) for g in GAPS)


def _cycle_kinds(c: RingConfig) -> Dict[Tuple[str, str], ContactType]:
    return {p: c.contact(*p).kind for p in CYCLE}


def _make_proper(c: RingConfig, pair: Tuple[str, str], step_budget: Fraction) -> RingConfig:
    before = _cycle_kinds(c)
    amount = min(s.side for s in c.squares.values()) / 16
    for _ in range(64):
        for label, corner in product(pair, Corner):
            vel = {label: scale_velocity(corner)}
            try:
                cand = advance(c, vel, amount)
            except ValueError:
                continue
            if ring_problems(cand):
                continue
            kinds = _cycle_kinds(cand)
            if kinds[pair] is not ContactType.PROPER:
                continue
            if any(before[p] is ContactType.PROPER and kinds[p] is not ContactType.PROPER for p in CYCLE):
                continue
            if max(abs(cand.ratio(g) - c.ratio(g)) for g in GAPS) < step_budget:
                return cand
        amount /= 2
    raise AssertionError(f"could not make contact {pair} proper: {c}")


class Family(NamedTuple):
    """Scaling one square from one corner, used to hit a nearby bounding ratio."""
    square: str
    corner: Corner


FAMILIES = tuple(Family(s, k) for s in ("l", "r", "t", "b") for k in Corner)


def _fit_family(c: RingConfig, fam: Family, lam: Fraction) -> Optional[RingConfig]:
    """Member of the family whose bounding ratio is exactly ``lam``, if it is a valid ring
    with all cycle contacts proper."""
    if c.bounding_ratio == lam:
        return c
    vel = {fam.square: scale_velocity(fam.corner)}

    def dims(d):
        sq = _raw(c, vel, Fraction(d))
        return sq["r"].right - sq["l"].x, sq["t"].top - sq["b"].y

    (w0, h0), (w1, h1) = dims(0), dims(1)
    dw, dh = w1 - w0, h1 - h0
    denom = dh - lam * dw
    if denom == 0:
        return None
    a = (lam * w0 - h0) / denom
    try:
        cand = advance(c, vel, a)
    except ValueError:
        return None
    if cand.bounding_ratio != lam or ring_problems(cand):
        return None
    if any(k is not ContactType.PROPER for k in _cycle_kinds(cand).values()):
        return None
    return cand


def _within(c: Optional[RingConfig], targets: RingTargets, eps: Fraction) -> bool:
    return c is not None and _max_deviation(c, targets) < eps


def certified_family(c: RingConfig, targets: RingTargets, eps: Fraction,
                     delta: Fraction) -> Optional[Family]:
    """A family that stays valid and within ``eps`` at both ends of ``lam +- delta``.

    Inside a family the bounding ratio is a monotone Moebius function of the
    scaling amount, gap ratios are monotone in it, and validity is a set of
    linear inequalities; so checking both ends certifies the whole interval.
    """
    lam = c.bounding_ratio
    for fam in FAMILIES:
        if all(_within(_fit_family(c, fam, lam + s * delta), targets, eps) for s in (-1, 1)):
            return fam
    return None


def properize(c: RingConfig, targets: RingTargets, eps: Number) -> ProperRing:
    """Turn point contacts of the cycle into proper ones, keeping every gap within eps/2.

    Returns the new ring, its bounding ratio and a certified slack on that ratio.
    """
    eps = Q(eps)
    if eps <= 0:
        raise NonPositiveInput("eps must be positive")
    if _max_deviation(c, targets) >= eps / 2:
        raise RingError("input ring is not within eps/2 of the targets")
    step_budget = eps / 8
    for pair in CYCLE:
        if c.contact(*pair).kind is ContactType.POINT:
            c = _make_proper(c, pair, step_budget)
    check_ring(c, "after properize")
    assert all(k is ContactType.PROPER for k in _cycle_kinds(c).values())
    assert _max_deviation(c, targets) < eps / 2

    delta = eps / 4
    lam = c.bounding_ratio
    for _ in range(64):
        if delta < lam and certified_family(c, targets, eps, delta) is not None:
            return ProperRing(c, lam, delta)
        delta /= 2
    raise AssertionError(f"no slack certified after 64 halvings: {c}")


def fit_ring(proper: ProperRing, targets: RingTargets, eps: Number, rect: Rect) -> RingConfig:
    """Place the ring into ``rect``, whose ratio must be within the certified slack."""
    eps = Q(eps)
    lam = rect.height / rect.width
    if abs(lam - proper.lam) > proper.delta:
        raise RingError(f"ratio {lam} outside {proper.lam} +- {proper.delta}")
    fam = certified_family(proper.config, targets, eps, proper.delta)
    if fam is None:
        raise AssertionError("certified family vanished")
    c = _fit_family(proper.config, fam, lam)
    if not _within(c, targets, eps):
        raise AssertionError(f"fitted ring misses its targets: {c}")
    return c.scaled_into(rect)


def build_ring(targets: RingTargets, eps: Number) -> ProperRing:
    c, _ = subdivide_ring(targets)
    return properize(c, targets, eps)
