"""Recursive layout of a graph in the class: plan ratios bottom-up, place squares top-down.

Planning walks the face tree from the leaves. A leaf must end within ``eps``
of its target. An internal face gets the gap ratio its subdivision needs and a
window around it: as long as the realized gap lands inside the window, each
child lands inside its own window. Realization then starts from a pinwheel
around the root gap and subdivides every gap in turn.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from .geometry import Number, Q, Rect, Square, aspect_ratio
from .graph import (
    RING_CHILDREN, BuildProgram, FaceId, GraphG, InsertVertex, ProgramError,
    SplitPair, VertexId, build_graph,
)
from .quad import Axis, split_delta, split_three, vertical_split_delta
from .ring.config import RingTargets
from .ring.construct import ProperRing, build_ring, fit_ring


class NonPositiveInput(ValueError):
    pass


class BudgetExhausted(AssertionError):
    def __init__(self, face: FaceId, ratio: Fraction, required: Fraction, window: Fraction):
        self.face, self.ratio, self.required, self.window = face, ratio, required, window
        super().__init__(f"face {face}: realized ratio {ratio} is {abs(ratio - required)} from "
                         f"{required}, window is {window}")


@dataclass
class PlanNode:
    face: FaceId
    kind: str  # leaf | vertex-h | vertex-v | ring
    required: Fraction
    # the realized gap must lie strictly within this distance of ``required``
    window: Fraction
    # tolerance handed to the children (eps for a leaf)
    budget: Fraction
    children: List[FaceId] = field(default_factory=list)
    ring: Optional[ProperRing] = None
    ring_targets: Optional[RingTargets] = None


Plan = Dict[FaceId, PlanNode]


@dataclass
class SCR:
    squares: Dict[VertexId, Square]
    gaps: Dict[FaceId, Rect]
    frame: Rect

    def gap_ratios(self) -> Dict[FaceId, Fraction]:
        return {f: aspect_ratio(r) for f, r in self.gaps.items()}


def plan_ratios(g: GraphG, targets: Mapping[FaceId, Fraction], eps: Number) -> Plan:
    eps = Q(eps)
    if eps <= 0:
        raise ProgramError("NonPositiveTolerance", f"eps = {eps}")
    plan: Plan = {}
    for f in reversed(g.preorder()):
        node = g.faces[f]
        if node.is_leaf:
            if f not in targets:
                raise ProgramError("MissingTarget", f"face {f} has no target")
            t = Q(targets[f])
            if t <= 0:
                raise ProgramError("NonPositiveTarget", f"face {f} = {t}")
            plan[f] = PlanNode(f, "leaf", t, eps, eps)
            continue
        kids = [plan[c] for c in node.children]
        budget = min(k.window for k in kids)
        if isinstance(node.op, InsertVertex):
            a1, a2 = kids[0].required, kids[1].required
            if node.op.split_pair is SplitPair.FIRST_THIRD:
                plan[f] = PlanNode(f, "vertex-h", a1 + a2 + 1, split_delta(a1, a2, budget), budget)
            else:
                plan[f] = PlanNode(f, "vertex-v", 1 / (1 / a1 + 1 / a2 + 1),
                                   vertical_split_delta(a1, a2, budget), budget)
        else:
            rt = RingTargets(**{name: k.required for name, k in zip(RING_CHILDREN, kids)})
            ring = build_ring(rt, budget)
            plan[f] = PlanNode(f, "ring", ring.lam, ring.delta, budget, ring=ring, ring_targets=rt)
        plan[f].children = list(node.children)
    return plan


def basis_pinwheel(alpha1: Number) -> SCR:
    """The 4-cycle as a clockwise pinwheel around a 1 x alpha1 gap at (1, 1)."""
    a = Q(alpha1)
    if a <= 0:
        raise NonPositiveInput("alpha1 must be positive")
    s = 1 + a
    gap = Rect(1, 1, 1, a)
    squares = {
        0: Square(1 - s, 1 + a - s, s),  # left
        1: Square(2 - s, 1 + a, s),      # top
        2: Square(2, 1, s),              # right
        3: Square(1, 1 - s, s),          # bottom
    }
    return SCR(squares, {0: gap}, Rect.from_bounds(1 - s, 1 - s, 2 + s, 1 + a + s))


def _check_window(node: PlanNode, rect: Rect):
    ratio = aspect_ratio(rect)
    if abs(ratio - node.required) >= node.window:
        raise BudgetExhausted(node.face, ratio, node.required, node.window)


def realize(g: GraphG, plan: Plan, eps: Number) -> SCR:
    root = plan[g.root]
    scr = basis_pinwheel(root.required)
    rects: Dict[FaceId, Rect] = {g.root: scr.gaps.pop(0)}
    squares = scr.squares
    for f in g.preorder():
        node, pnode = g.faces[f], plan[f]
        rect = rects.pop(f)
        if node.is_leaf:
            scr.gaps[f] = rect
            continue
        _check_window(pnode, rect)
        kids = [plan[c] for c in node.children]
        if pnode.kind in ("vertex-h", "vertex-v"):
            axis = Axis.HORIZONTAL_CUTS if pnode.kind == "vertex-h" else Axis.VERTICAL_CUTS
            first, sq, second = split_three(rect, kids[0].required, kids[1].required, axis)
            squares[node.new_vertices[0]] = sq
            rects[node.children[0]], rects[node.children[1]] = first, second
        else:
            ring = fit_ring(pnode.ring, pnode.ring_targets, pnode.budget, rect)
            for v, label in zip(node.new_vertices, ("l", "t", "r", "b")):
                squares[v] = ring.square(label)
            for c, name in zip(node.children, RING_CHILDREN):
                rects[c] = ring.gap(name)
    return scr


def layout(p: BuildProgram) -> Tuple[GraphG, SCR]:
    g = build_graph(p)
    plan = plan_ratios(g, p.targets, p.eps)
    return g, realize(g, plan, p.eps)
