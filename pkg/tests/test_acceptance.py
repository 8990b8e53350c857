"""The twelve acceptance criteria, each with its runtime limit.

Each test records one PASS/FAIL line, shown in the "acceptance criteria"
section at the end of the pytest run.
"""

from contextlib import contextmanager
from fractions import Fraction as F
import math
import random
import time

from squarecontact.cli import main
from squarecontact.forcing import RatioInterval, force_ratio
from squarecontact.geometry import ContactType, Rect, aspect_ratio
from squarecontact.graph import k2n_program
from squarecontact.layout import layout
from squarecontact.quad import split_delta, split_three
from squarecontact.ring.config import GAPS, RingTargets, check_ring, initial_config, ring_problems
from squarecontact.ring.construct import properize, subdivide_ring
from squarecontact.ring.moves import pinwheel_chain
from squarecontact.verify import central_gap_ratio, check_spacing, hub_distance, verify_scr

from conftest import ACCEPTANCE_LINES
from programs import random_program
from ring_cases import random_pinwheel

CYCLE = (("t", "r"), ("r", "b"), ("b", "l"), ("l", "t"))


@contextmanager
def criterion(number: int, name: str, limit: float):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        ok = elapsed < limit
        detail = f"{elapsed:.2f}s (limit {limit:g}s)"
    except Exception as exc:
        elapsed = time.perf_counter() - start
        ok, detail = False, f"{type(exc).__name__}: {exc}"[:200]
        raise
    finally:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} criterion {number:2d} {name}: {detail}")
        print(ACCEPTANCE_LINES[-1])
    assert ok, detail


def rational(rng: random.Random, lo: F, hi: F, den: int = 997) -> F:
    return lo + (hi - lo) * F(rng.randint(0, den), den)


def ring_targets(n: int = 200, seed: int = 2):
    rng = random.Random(seed)
    return [RingTargets(*(rational(rng, F(1, 5), F(5), 120) for _ in GAPS)) for _ in range(n)]


def test_01_split_exactness():
    rng = random.Random(1)
    with criterion(1, "three-way split is exact", 1):
        for _ in range(200):
            a, b = rational(rng, F(1, 10), F(10)), rational(rng, F(1, 10), F(10))
            top, sq, bottom = split_three(Rect(0, 0, 1, a + b + 1), a, b)
            assert (aspect_ratio(top), aspect_ratio(sq), aspect_ratio(bottom)) == (a, 1, b)


def test_02_split_tolerance():
    rng = random.Random(2)
    with criterion(2, "three-way split within tolerance", 1):
        for _ in range(200):
            a, b = rational(rng, F(1, 10), F(10)), rational(rng, F(1, 10), F(10))
            eps = rational(rng, F(1, 1000), F(1, 2))
            delta = split_delta(a, b, eps)
            gamma = a + b + 1 + delta * F(rng.randint(-999, 999), 1000)
            top, sq, bottom = split_three(Rect(0, 0, 1, gamma), a, b)
            assert aspect_ratio(top) == a and aspect_ratio(sq) == 1
            assert abs(aspect_ratio(bottom) - b) < eps


def test_03_ring_exactness():
    with criterion(3, "four-square ring meets all five ratios exactly", 30):
        for t in ring_targets():
            c, _ = subdivide_ring(t)
            assert not ring_problems(c)  # tiling, no overlap
            assert c.ratios() == t.as_dict()
            for a, b in CYCLE:
                assert c.contact(a, b).kind in (ContactType.POINT, ContactType.PROPER)
            for a, b in (("t", "b"), ("l", "r")):
                assert c.contact(a, b).kind is ContactType.DISJOINT


def test_04_ring_properness():
    eps = F(1, 1000)
    rings = [(t, subdivide_ring(t)[0]) for t in ring_targets()]
    with criterion(4, "properized ring has proper contacts within 1/1000", 60):
        for t, c in rings:
            p = properize(c, t, eps)
            check_ring(p.config)
            for a, b in CYCLE:
                k = p.config.contact(a, b)
                assert k.kind is ContactType.PROPER and k.length > 0
            assert all(abs(p.config.ratio(g) - t[g]) < eps for g in GAPS)


def test_05_end_to_end_layouts():
    rng = random.Random(5)
    with criterion(5, "random programs lay out and verify", 120):
        kinds = set()
        for _ in range(50):
            p = random_program(rng, max_ops=12, eps=F(1, 100))
            kinds.update(type(op).__name__ for op in p.ops)
            g, scr = layout(p)
            report = verify_scr(g, scr, p.targets, p.eps)
            assert report.ok, report.failed()
            assert all(abs(aspect_ratio(scr.gaps[f]) - p.targets[f]) < p.eps for f in g.leaves)
        assert kinds == {"InsertVertex", "InsertCycle"}


def test_06_initial_configuration():
    rng = random.Random(6)
    with criterion(6, "initial ring has corner ratios 1/alpha", 1):
        for _ in range(20):
            a = rational(rng, F(1, 20), F(20))
            c = initial_config(a)
            assert c.ratio("c") == a
            assert all(c.ratio(g) == 1 / a for g in ("tl", "tr", "br", "bl"))


def test_07_pinwheel_chain():
    rng = random.Random(7)
    with criterion(7, "pinwheel growth chain strictly decreases", 1):
        for _ in range(100):
            c = random_pinwheel(rng)
            d1 = rational(rng, F(1, 100), F(10))
            d1, d2, d3, d4 = pinwheel_chain(c, d1)
            h = c.center.height
            assert d2 == d1 * c.l.side / (c.b.side + h)
            assert d4 < d3 < d2 < d1


def test_08_spacing():
    with criterion(8, "K_2,n hubs are closer than min side/(n-2)", 5):
        for n in (4, 6, 10):
            p = k2n_program(n)
            g, scr = layout(p)
            assert verify_scr(g, scr, p.targets, p.eps).ok
            distance, bound, ok = check_spacing(g, scr, n)
            a, b = scr.squares[1], scr.squares[3]
            assert distance == hub_distance(a, b)
            assert bound == min(a.side, b.side) / (n - 2)
            assert ok and distance < bound


def test_09_forcing_contraction():
    delta = F(1, 100)
    limit = math.ceil(math.log2(2 / delta)) + 1
    with criterion(9, "forced ratio intervals nest and contract", 30):
        for r in (F(1), F(3, 2), F(5), F(1, 3)):
            res = force_ratio(r, delta)
            target = 1 / r if res.rotated else r
            ivs = res.intervals
            for a, b in zip(ivs, ivs[1:]):
                assert b.within(a) and b.closure_contains(target)
            # the first iteration normalizes the unbounded start
            for a, b in zip(ivs[1:], ivs[2:]):
                assert b.length < a.length / 2
            assert res.certified.within(RatioInterval(r - delta, r + delta))
            assert res.iterations <= limit
        assert res.rotated
        assert force_ratio(F(3, 2), delta).certified.within(RatioInterval(F(149, 100), F(151, 100)))


def test_10_forcing_forward():
    with criterion(10, "forced program realizes a ratio in the certified interval", 30):
        res = force_ratio(F(3, 2), F(1, 10))
        p = res.program
        g, scr = layout(p)
        assert verify_scr(g, scr, p.targets, p.eps).ok
        assert res.certified.contains(central_gap_ratio(scr))


def test_11_verifier_fuzz():
    rng = random.Random(11)
    layouts = []
    for _ in range(10):
        p = random_program(rng, max_ops=8)
        layouts.append((p, *layout(p)))
    with criterion(11, "every single-square perturbation is caught", 10):
        for _ in range(100):
            p, g, scr = rng.choice(layouts)
            v = rng.choice(sorted(scr.squares))
            shift = F(rng.choice([-1, 1]) * rng.randint(1, 1000), rng.randint(1, 10**6))
            squares = dict(scr.squares)
            squares[v] = squares[v].translated(**{rng.choice(["dx", "dy"]): shift})
            bad = type(scr)(squares, scr.gaps, scr.frame)
            assert not verify_scr(g, bad, p.targets, p.eps).ok


def test_12_determinism(tmp_path):
    from squarecontact.io import emit_program
    prog = tmp_path / "prog.txt"
    prog.write_text(emit_program(random_program(random.Random(12), max_ops=12)))
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    with criterion(12, "layout output is byte-identical across runs", 1):
        assert main(["layout", str(prog), "-o", str(a)]) == 0
        assert main(["layout", str(prog), "-o", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()
