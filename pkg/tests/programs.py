"""Random build programs for the layout tests."""

from fractions import Fraction as F
import random

from squarecontact.graph import BuildProgram, InsertCycle, InsertVertex, SplitPair, build_graph


def random_program(rng: random.Random, max_ops: int = 12, eps: F = F(1, 100),
                   lo: F = F(1, 4), hi: F = F(4)) -> BuildProgram:
    ops = []
    leaves = [0]
    next_face = 1
    for _ in range(rng.randint(0, max_ops)):
        f = leaves.pop(rng.randrange(len(leaves)))
        if rng.random() < 0.3:
            ops.append(InsertCycle(f))
            n = 5
        else:
            ops.append(InsertVertex(f, rng.choice(list(SplitPair))))
            n = 2
        leaves.extend(range(next_face, next_face + n))
        next_face += n
    p = BuildProgram(ops)
    for f in build_graph(p).leaves:
        p.targets[f] = lo + (hi - lo) * F(rng.randint(0, 60), 60)
    p.eps = eps
    return p
