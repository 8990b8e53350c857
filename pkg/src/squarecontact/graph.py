"""Build programs for the quadrangulation class and the graphs they produce.

A program starts from the 4-cycle and applies two operations to bounded
4-faces: inserting a single vertex joined to an opposite pair of corners, or
inserting a 4-cycle joined corner-to-corner. The face tree records the
construction history, which is what the layout recursion walks.

Every face stores its corners as ``(left, top, right, bottom)``, i.e. the
vertices whose squares bound the face's gap on those sides.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

FaceId = int
VertexId = int
Corners = Tuple[VertexId, VertexId, VertexId, VertexId]


class SplitPair(Enum):
    # joins the left and right corners: the new square spans the gap's width
    FIRST_THIRD = "h"
    # joins the top and bottom corners: the new square spans the gap's height
    SECOND_FOURTH = "v"


@dataclass(frozen=True)
class InsertVertex:
    face: FaceId
    split_pair: SplitPair = SplitPair.FIRST_THIRD


@dataclass(frozen=True)
class InsertCycle:
    face: FaceId


BuildOp = Union[InsertVertex, InsertCycle]

# child order of an InsertCycle node
RING_CHILDREN = ("tl", "bl", "br", "tr", "c")


@dataclass
class BuildProgram:
    ops: List[BuildOp] = field(default_factory=list)
    targets: Dict[FaceId, Fraction] = field(default_factory=dict)
    eps: Fraction = Fraction(1, 100)


class ProgramError(ValueError):
    def __init__(self, kind: str, message: str, op_index: Optional[int] = None):
        self.kind = kind
        self.op_index = op_index
        where = f"@op{op_index}" if op_index is not None else ""
        super().__init__(f"{kind}{where}: {message}")


@dataclass
class FaceNode:
    face: FaceId
    corners: Corners
    op: Optional[BuildOp] = None
    op_index: Optional[int] = None
    children: List[FaceId] = field(default_factory=list)
    new_vertices: List[VertexId] = field(default_factory=list)
    parent: Optional[FaceId] = None

    @property
    def is_leaf(self) -> bool:
        return self.op is None


@dataclass
class GraphG:
    vertices: List[VertexId]
    edges: List[Tuple[VertexId, VertexId]]
    faces: Dict[FaceId, FaceNode]
    outer: Corners = (0, 1, 2, 3)
    root: FaceId = 0

    @property
    def leaves(self) -> List[FaceId]:
        return [f for f, node in self.faces.items() if node.is_leaf]

    def adjacency(self) -> Dict[VertexId, set]:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def edge_set(self) -> set:
        return {frozenset(e) for e in self.edges}

    def is_bipartite(self) -> bool:
        adj = self.adjacency()
        color: Dict[VertexId, int] = {}
        for start in self.vertices:
            if start in color:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in adj[u]:
                    if v not in color:
                        color[v] = 1 - color[u]
                        queue.append(v)
                    elif color[v] == color[u]:
                        return False
        return True

    def preorder(self) -> List[FaceId]:
        order, stack = [], [self.root]
        while stack:
            f = stack.pop()
            order.append(f)
            stack.extend(reversed(self.faces[f].children))
        return order


def build_graph(p: BuildProgram) -> GraphG:
    vertices = [0, 1, 2, 3]
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    faces = {0: FaceNode(0, (0, 1, 2, 3))}
    next_face, next_vertex = 1, 4

    for i, op in enumerate(p.ops):
        node = faces.get(op.face)
        if node is None:
            raise ProgramError("UnknownFace", f"face {op.face} does not exist", i)
        if not node.is_leaf:
            raise ProgramError("FaceAlreadySubdivided", f"face {op.face} was split by op{node.op_index}", i)
        left, top, right, bottom = node.corners
        if isinstance(op, InsertVertex):
            u = next_vertex
            next_vertex += 1
            vertices.append(u)
            if op.split_pair is SplitPair.FIRST_THIRD:
                edges += [(u, left), (u, right)]
                child_corners = [(left, top, right, u), (left, u, right, bottom)]
            else:
                edges += [(u, top), (u, bottom)]
                child_corners = [(left, top, u, bottom), (u, top, right, bottom)]
            node.new_vertices = [u]
        elif isinstance(op, InsertCycle):
            ul, ut, ur, ub = range(next_vertex, next_vertex + 4)
            next_vertex += 4
            vertices += [ul, ut, ur, ub]
            edges += [(ul, left), (ut, top), (ur, right), (ub, bottom),
                      (ul, ut), (ut, ur), (ur, ub), (ub, ul)]
            child_corners = [
                (left, top, ut, ul),     # top-left
                (left, ul, ub, bottom),  # bottom-left
                (ub, ur, right, bottom),  # bottom-right
                (ut, top, right, ur),    # top-right
                (ul, ut, ur, ub),        # center
            ]
            node.new_vertices = [ul, ut, ur, ub]
        else:
            raise ProgramError("BadOp", f"unknown operation {op!r}", i)
        node.op, node.op_index = op, i
        for corners in child_corners:
            faces[next_face] = FaceNode(next_face, corners, parent=op.face)
            node.children.append(next_face)
            next_face += 1

    return GraphG(vertices, edges, faces)


def validate_program(p: BuildProgram) -> List[str]:
    """Human-readable problems with ``p``; empty when it builds and is well-posed."""
    diagnostics = []
    try:
        g = build_graph(p)
    except ProgramError as exc:
        return [str(exc)]
    if p.eps <= 0:
        diagnostics.append(f"NonPositiveTolerance: eps = {p.eps}")
    leaves = set(g.leaves)
    for f in sorted(leaves):
        if f not in p.targets:
            diagnostics.append(f"MissingTarget: face {f}")
    for f, value in sorted(p.targets.items()):
        if f not in g.faces:
            diagnostics.append(f"UnknownFace: target for face {f}")
        elif f not in leaves:
            diagnostics.append(f"TargetOnInternalFace: face {f} is subdivided")
        if value <= 0:
            diagnostics.append(f"NonPositiveTarget: face {f} = {value}")
    return diagnostics


def k2n_program(n: int, target: Fraction = Fraction(1)) -> BuildProgram:
    """Program whose graph is K_{2,n}; the hubs are the top and bottom vertices."""
    if n < 2:
        raise ValueError("K_{2,n} needs n >= 2")
    ops: List[BuildOp] = []
    face = 0
    for _ in range(n - 2):
        ops.append(InsertVertex(face, SplitPair.SECOND_FOURTH))
        # children of this op are (left, right); keep splitting the right one
        face = 1 + 2 * len(ops) - 1
    g = build_graph(BuildProgram(ops))
    return BuildProgram(ops, {f: Fraction(target) for f in g.leaves})
