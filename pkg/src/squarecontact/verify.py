"""Independent checks of a square contact representation.

Only the plain geometry and the graph are consulted, never the layout engine's
internal state, so a layout read back from a file is audited the same way as
one produced in memory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Mapping, Optional, Tuple

from .geometry import ContactType, Number, Q, aspect_ratio, classify_bounds
from .graph import FaceId, GraphG


class NotK2n(ValueError):
    pass


@dataclass
class Check:
    name: str
    ok: bool = True
    findings: List[dict] = field(default_factory=list)

    def fail(self, **record):
        self.ok = False
        self.findings.append(record)


@dataclass
class Report:
    checks: List[Check]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def failed(self) -> List[str]:
        return [c.name for c in self.checks if not c.ok]

    def records(self) -> List[dict]:
        out = []
        for c in self.checks:
            out.append({"check": c.name, "ok": c.ok, "findings": c.findings})
        return out


CHECK_NAMES = ("square_overlap", "contact_graph", "gap_square_overlap", "gap_ratios", "no_overlap")


def _touching_pairs(boxes: List[Tuple[tuple, tuple]]):
    """Yield (id_a, id_b, contact) for every pair of closed boxes that intersect."""
    order = sorted(boxes, key=lambda item: item[1][0])
    active: List[Tuple[tuple, tuple]] = []
    for ident, b in order:
        x0 = b[0]
        active = [a for a in active if a[1][2] >= x0]
        for other, ob in active:
            if ob[1] <= b[3] and b[1] <= ob[3]:
                kind = classify_bounds(ob, b)
                if kind.kind is not ContactType.DISJOINT:
                    yield other, ident, kind
        active.append((ident, b))


def verify_scr(g: GraphG, scr, targets: Mapping[FaceId, Fraction], eps: Number) -> Report:
    eps = Q(eps)
    checks = {name: Check(name) for name in CHECK_NAMES}
    boxes = []
    for v in g.vertices:
        s = scr.squares.get(v)
        if s is None:
            checks["contact_graph"].fail(vertex=v, problem="no square")
            continue
        boxes.append((("square", v), s.bounds))
    for f in g.leaves:
        r = scr.gaps.get(f)
        if r is None:
            checks["gap_ratios"].fail(face=f, problem="no gap")
            continue
        boxes.append((("gap", f), r.bounds))

    edges = g.edge_set()
    proper = set()
    for (ka, a), (kb, b), contact in _touching_pairs(boxes):
        if contact.kind is ContactType.OVERLAP:
            kinds = {ka, kb}
            if kinds == {"square"}:
                checks["square_overlap"].fail(vertices=sorted([a, b]))
            elif kinds == {"square", "gap"}:
                sq, gp = (a, b) if ka == "square" else (b, a)
                checks["gap_square_overlap"].fail(vertex=sq, face=gp)
            checks["no_overlap"].fail(pair=[f"{ka}:{a}", f"{kb}:{b}"])
        elif ka == kb == "square" and contact.kind is ContactType.PROPER:
            proper.add(frozenset((a, b)))
    for e in sorted(edges - proper, key=sorted):
        checks["contact_graph"].fail(edge=sorted(e), problem="missing proper contact")
    for e in sorted(proper - edges, key=sorted):
        checks["contact_graph"].fail(edge=sorted(e), problem="contact without edge")

    for f in g.leaves:
        r = scr.gaps.get(f)
        if r is None:
            continue
        if f not in targets:
            checks["gap_ratios"].fail(face=f, problem="no target")
            continue
        ratio = aspect_ratio(r)
        dev = abs(ratio - Q(targets[f]))
        if dev >= eps:
            checks["gap_ratios"].fail(face=f, ratio=str(ratio), target=str(targets[f]), deviation=str(dev))
    return Report([checks[n] for n in CHECK_NAMES])


def k2n_hubs(g: GraphG) -> Tuple[int, int, int]:
    """The two hub vertices and n, or NotK2n."""
    adj = g.adjacency()
    nv = len(g.vertices)
    n = nv - 2
    if n < 2 or not g.is_bipartite():
        raise NotK2n("graph is not a bipartite K_{2,n}")
    hubs = [v for v in g.vertices if len(adj[v]) == n]
    if n == 2 and hubs:
        # in a 4-cycle any vertex and its opposite form the pair
        hubs = [hubs[0]] + [v for v in hubs[1:] if v not in adj[hubs[0]]]
    if len(hubs) != 2 or adj[hubs[0]] != adj[hubs[1]] or hubs[1] in adj[hubs[0]]:
        raise NotK2n("no two vertices share all n neighbours")
    others = set(g.vertices) - set(hubs)
    if adj[hubs[0]] != others or any(adj[v] != set(hubs) for v in others):
        raise NotK2n("partite structure does not match K_{2,n}")
    return hubs[0], hubs[1], n


def hub_distance(a, b) -> Fraction:
    """Separation of two disjoint squares along the axis that separates them."""
    dx = max(a.x - b.right, b.x - a.right)
    dy = max(a.y - b.top, b.y - a.top)
    return max(dx, dy)


def check_spacing(g: GraphG, scr, n: Optional[int] = None) -> Tuple[Fraction, Fraction, bool]:
    """Distance between the hubs of a K_{2,n} layout against min(side)/(n-2)."""
    h1, h2, found = k2n_hubs(g)
    if n is not None and n != found:
        raise NotK2n(f"graph is K_2,{found}, not K_2,{n}")
    if found <= 2:
        raise NotK2n("the spacing bound needs n > 2")
    a, b = scr.squares[h1], scr.squares[h2]
    distance = hub_distance(a, b)
    bound = min(a.side, b.side) / (found - 2)
    return distance, bound, distance < bound


def central_gap_ratio(scr, outer=(0, 1, 2, 3)) -> Fraction:
    """Ratio of the gap enclosed by the four outer squares (left, top, right, bottom)."""
    left, top, right, bottom = (scr.squares[v] for v in outer)
    return (top.y - bottom.top) / (right.x - left.right)
