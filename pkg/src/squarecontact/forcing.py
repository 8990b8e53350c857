"""Programs whose central gap ratio is pinned to a small interval in every layout.

Squares are inserted into a single remaining gap in alternating phases: a
vertical phase stacks squares that span the gap's width (each hugging the one
below), a horizontal phase lines up squares that span its height (each hugging
the one to the left). If the remaining gap has ratio ``rho`` afterwards, the
central gap has ratio ``G(rho)`` for a Moebius map ``G`` composed phase by
phase, so the certified interval is ``G((0, inf))``.

A hug is not a contact of the graph. It is enforced approximately by a row of
padding squares in the thin corridor between the square and what it hugs;
the corridor's height is then bounded by the hub spacing of K_{2,n}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, List, Optional, Tuple

from .geometry import Number, Q
from .graph import BuildProgram, InsertVertex, SplitPair, build_graph

INF = None  # upper bound of an unbounded interval


class NonPositiveInput(ValueError):
    pass


class NoAdmissiblePhase(AssertionError):
    pass


@dataclass(frozen=True)
class MobiusMap:
    """h -> (a*h + b) / (c*h + d)."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Q(getattr(self, name)))
        if self.det == 0:
            raise ValueError("degenerate Moebius map")

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def __call__(self, h: Optional[Fraction]) -> Optional[Fraction]:
        if h is INF:
            return INF if self.c == 0 else self.a / self.c
        den = self.c * h + self.d
        if den == 0:
            return INF
        return (self.a * h + self.b) / den

    def then_inner(self, inner: "MobiusMap") -> "MobiusMap":
        """self after inner: h -> self(inner(h))."""
        o, i = self, inner
        return MobiusMap(o.a * i.a + o.b * i.c, o.a * i.b + o.b * i.d,
                         o.c * i.a + o.d * i.c, o.c * i.b + o.d * i.d)


IDENTITY_MAP = MobiusMap(1, 0, 0, 1)


def vertical_phase_map(size: int) -> MobiusMap:
    # the gap below the remaining one is ``size`` unit squares taller
    return MobiusMap(1, size, 0, 1)


def horizontal_phase_map(size: int) -> MobiusMap:
    # 1/rho_before = 1/rho_after + size
    return MobiusMap(1, 0, size, 1)


def phase_pair_map(k: int, l: int) -> MobiusMap:
    """Effect of a horizontal phase of size k inside a vertical phase of size l."""
    if k < 1 or l < 1:
        raise NonPositiveInput("phase sizes must be at least 1")
    return MobiusMap(k * l + 1, l, k, 1)


@dataclass(frozen=True)
class RatioInterval:
    lower: Fraction
    upper: Optional[Fraction] = INF

    def __post_init__(self):
        object.__setattr__(self, "lower", Q(self.lower))
        if self.upper is not INF:
            object.__setattr__(self, "upper", Q(self.upper))
            if self.upper <= self.lower:
                raise ValueError(f"empty interval ({self.lower}, {self.upper})")
        if self.lower < 0:
            raise ValueError("ratios are positive")

    @property
    def length(self) -> Optional[Fraction]:
        return INF if self.upper is INF else self.upper - self.lower

    @property
    def bounded(self) -> bool:
        return self.upper is not INF

    def contains(self, x: Fraction) -> bool:
        return self.lower < x and (self.upper is INF or x < self.upper)

    def closure_contains(self, x: Fraction) -> bool:
        return self.lower <= x and (self.upper is INF or x <= self.upper)

    def within(self, other: "RatioInterval") -> bool:
        if self.lower < other.lower:
            return False
        if other.upper is INF:
            return True
        return self.upper is not INF and self.upper <= other.upper


FULL = RatioInterval(Fraction(0), INF)


def interval_image(m: MobiusMap, J: RatioInterval) -> RatioInterval:
    """Image of ``J`` under an increasing map (positive determinant, no pole in J)."""
    if m.det <= 0:
        raise ValueError("interval_image needs an increasing map")
    out = RatioInterval(m(J.lower), m(J.upper))
    if J.bounded and m.d > 0 and m.c > 0:
        # |m(y) - m(x)| = det |y - x| / ((c x + d)(c y + d)); equality, not strict
        bound = m.det * J.length / ((m.c * J.lower + m.d) * (m.c * J.upper + m.d))
        assert out.length <= bound, (out, bound)
    return out


class Orientation:
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


@dataclass(frozen=True)
class Phase:
    orientation: str
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("phase size must be at least 1")

    def map(self) -> MobiusMap:
        if self.orientation == Orientation.VERTICAL:
            return vertical_phase_map(self.size)
        return horizontal_phase_map(self.size)


@dataclass
class ForcingState:
    G: MobiusMap = IDENTITY_MAP
    interval: RatioInterval = FULL

    def candidate(self, phase: Phase) -> RatioInterval:
        return interval_image(self.G.then_inner(phase.map()), FULL)

    def apply(self, phase: Phase):
        self.G = self.G.then_inner(phase.map())
        new = interval_image(self.G, FULL)
        assert new.within(self.interval), (new, self.interval)
        self.interval = new


def _largest(ok: Callable[[int], bool]) -> int:
    """Largest n >= 1 with ok(n), for a predicate that is true then false."""
    lo, hi = 1, 2
    while ok(hi):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _smallest(ok: Callable[[int], bool]) -> int:
    """Smallest n >= 1 with ok(n), for a predicate that is false then true."""
    if ok(1):
        return 1
    return _largest(lambda n: not ok(n)) + 1


def choose_phase_size(state: ForcingState, r: Fraction, orientation: str) -> Optional[int]:
    """Largest phase size keeping ``r`` on the right side of the moved bound.

    A vertical phase raises the lower bound, a horizontal one lowers the upper
    bound. Returns None when every size qualifies, i.e. ``r`` already sits on
    the bound the phase would move towards.
    """
    r = Q(r)

    def bound(n: int) -> Fraction:
        iv = state.candidate(Phase(orientation, n))
        return iv.lower if orientation == Orientation.VERTICAL else iv.upper

    if orientation == Orientation.VERTICAL:
        ok = lambda n: bound(n) <= r
        limit = state.G(INF)
        if limit is not INF and limit <= r:
            return None
    else:
        ok = lambda n: bound(n) >= r
        if state.G(Fraction(0)) >= r:
            return None
    if not ok(1):
        raise NoAdmissiblePhase(f"{orientation} phase of size 1 already crosses {r}")
    return _largest(ok)


def _finishing_size(state: ForcingState, orientation: str, width: Fraction) -> int:
    return _smallest(lambda n: state.candidate(Phase(orientation, n)).length < width)


@dataclass(frozen=True)
class PaddingPlan:
    per_square: int  # padding squares in each corridor
    m: int           # phase squares
    ell: Fraction    # largest phase square side, central gap width 1
    delta: Fraction

    @property
    def total(self) -> int:
        return self.m * self.per_square


def padding_count(m: int, ell: Fraction, delta: Fraction) -> int:
    return math.ceil(2 * m * ell / delta + 2)


@dataclass
class ForcingResult:
    r: Fraction
    delta: Fraction
    certified: RatioInterval
    phases: List[Phase]
    padding: PaddingPlan
    rotated: bool
    # ideal interval after each iteration, starting with (0, inf)
    intervals: List[RatioInterval] = field(default_factory=list)
    eps: Fraction = Fraction(1, 100)

    @property
    def iterations(self) -> int:
        return len(self.intervals) - 1

    @cached_property
    def program(self) -> BuildProgram:
        return emit_program(self.phases, self.padding.per_square, self.rotated, self.eps)

    def __iter__(self):
        return iter((self.program, self.certified, self.phases, self.padding))


def run_phases(r: Fraction, delta: Fraction) -> Tuple[List[Phase], List[RatioInterval]]:
    """Alternate vertical and horizontal phases until the interval is shorter than delta/2.

    Needs r >= 1. For a rational r the continued expansion ends with r on a
    bound; the phase that would then be unbounded is instead sized just large
    enough to finish.
    """
    state = ForcingState()
    phases: List[Phase] = []
    intervals = [state.interval]
    finished = False
    while not finished and (not state.interval.bounded or state.interval.length >= delta / 2):
        for orientation in (Orientation.VERTICAL, Orientation.HORIZONTAL):
            size = choose_phase_size(state, r, orientation)
            if size is None:
                size = _finishing_size(state, orientation, delta / 2)
                finished = True
            phase = Phase(orientation, size)
            state.apply(phase)
            phases.append(phase)
            assert state.interval.closure_contains(r), (state.interval, r)
            if finished:
                break
        intervals.append(state.interval)
    return phases, intervals


def force_ratio(r: Number, delta: Number, eps: Number = Fraction(1, 100)) -> ForcingResult:
    r, delta = Q(r), Q(delta)
    if r <= 0 or delta <= 0:
        raise NonPositiveInput("r and delta must be positive")
    rotated = r < 1
    if rotated:
        target = 1 / r
        # slack on 1/r whose reciprocal image stays inside (r - delta, r + delta)
        slack = target - 1 / (r + delta)
        if r > delta:
            slack = min(slack, 1 / (r - delta) - target)
    else:
        target, slack = r, delta
    phases, intervals = run_phases(target, slack)
    last = intervals[-1]
    half = slack / 2
    cert = RatioInterval(max(last.lower - half, Fraction(0)), last.upper + half)
    if rotated:
        cert = RatioInterval(1 / cert.upper, INF if cert.lower == 0 else 1 / cert.lower)
    assert cert.within(RatioInterval(max(r - delta, Fraction(0)), r + delta)), cert
    m = sum(p.size for p in phases)
    plan = PaddingPlan(padding_count(m, Fraction(1), slack), m, Fraction(1), slack)
    return ForcingResult(r, delta, cert, phases, plan, rotated, intervals, Q(eps))


_SWAP = {SplitPair.FIRST_THIRD: SplitPair.SECOND_FOURTH, SplitPair.SECOND_FOURTH: SplitPair.FIRST_THIRD}


def emit_program(phases: List[Phase], per_square: int, rotated: bool = False,
                 eps: Fraction = Fraction(1, 100)) -> BuildProgram:
    """Concrete operations: each phase square, then its corridor of padding squares.

    With ``rotated`` every split is turned by a quarter, which inverts the
    central gap's ratio in every layout.
    """
    h, v = SplitPair.FIRST_THIRD, SplitPair.SECOND_FOURTH
    ops: List[InsertVertex] = []
    next_face = 1
    remaining = 0

    def insert(face, pair):
        nonlocal next_face
        ops.append(InsertVertex(face, pair))
        first, second = next_face, next_face + 1
        next_face += 2
        return first, second

    for phase in phases:
        for _ in range(phase.size):
            if phase.orientation == Orientation.VERTICAL:
                # square spans the width; corridor below, remaining gap above
                remaining, corridor = insert(remaining, h)
                for _ in range(per_square):
                    _, corridor = insert(corridor, v)
            else:
                # square spans the height; corridor to its left, remaining gap right
                corridor, remaining = insert(remaining, v)
                for _ in range(per_square):
                    _, corridor = insert(corridor, h)
    if rotated:
        ops = [InsertVertex(op.face, _SWAP[op.split_pair]) for op in ops]
    g = build_graph(BuildProgram(ops))
    return BuildProgram(ops, {f: Fraction(1) for f in g.leaves}, Q(eps))
