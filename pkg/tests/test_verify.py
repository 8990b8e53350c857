from fractions import Fraction as F
import random

import pytest

from squarecontact.geometry import Square
from squarecontact.graph import BuildProgram, InsertCycle, build_graph, k2n_program
from squarecontact.layout import basis_pinwheel, layout
from squarecontact.verify import (
    CHECK_NAMES, NotK2n, central_gap_ratio, check_spacing, hub_distance, k2n_hubs, verify_scr,
)

C4 = build_graph(BuildProgram())


def test_clean_report():
    rep = verify_scr(C4, basis_pinwheel(1), {0: 1}, F(1, 100))
    assert rep.ok and rep.failed() == []
    assert [r["check"] for r in rep.records()] == list(CHECK_NAMES)


def test_shrunk_square_loses_contacts():
    scr = basis_pinwheel(1)
    s = scr.squares[0]
    scr.squares[0] = Square(s.x, s.y, s.side - F(1, 1000))
    rep = verify_scr(C4, scr, {0: 1}, F(1, 100))
    assert rep.failed() == ["contact_graph"]
    assert {tuple(f["edge"]) for f in rep.check("contact_graph").findings} == {(0, 1), (0, 3)}


def test_nudged_square_loses_a_contact():
    scr = basis_pinwheel(1)
    scr.squares[0] = scr.squares[0].translated(dx=F(-1, 1000))
    rep = verify_scr(C4, scr, {0: 1}, F(1, 100))
    assert rep.failed() == ["contact_graph"]
    assert rep.check("contact_graph").findings == [{"edge": [0, 3], "problem": "missing proper contact"}]


def test_overlap_is_found():
    scr = basis_pinwheel(1)
    scr.squares[2] = scr.squares[2].translated(dx=F(-1, 2))
    rep = verify_scr(C4, scr, {0: 1}, F(1, 100))
    assert "gap_square_overlap" in rep.failed()
    assert "no_overlap" in rep.failed()
    assert "square_overlap" in rep.failed()


def test_ratio_outside_tolerance():
    rep = verify_scr(C4, basis_pinwheel(1), {0: F(102, 100)}, F(1, 50))
    assert rep.failed() == ["gap_ratios"]
    assert verify_scr(C4, basis_pinwheel(1), {0: F(101, 100)}, F(1, 50)).ok


def test_missing_pieces():
    scr = basis_pinwheel(1)
    del scr.squares[1]
    assert "contact_graph" in verify_scr(C4, scr, {0: 1}, F(1, 100)).failed()
    scr = basis_pinwheel(1)
    scr.gaps.clear()
    assert verify_scr(C4, scr, {0: 1}, F(1, 100)).failed() == ["gap_ratios"]


def test_square_inside_gap_is_flagged():
    scr = basis_pinwheel(1)
    scr.squares[2] = Square(1, 1, 1)
    rep = verify_scr(C4, scr, {0: 1}, F(1, 100))
    assert "gap_square_overlap" in rep.failed()


def test_hub_distance():
    assert hub_distance(Square(0, 0, 1), Square(3, F(1, 2), 1)) == 2
    assert hub_distance(Square(0, 0, 1), Square(F(1, 2), -4, 1)) == 3


@pytest.mark.parametrize("n,distance,bound", [
    (3, F(1, 3), F(4, 3)), (4, F(1, 5), F(3, 5)), (6, F(1, 9), F(5, 18)), (10, F(1, 17), F(9, 68)),
])
def test_k2n_spacing(n, distance, bound):
    p = k2n_program(n)
    g, scr = layout(p)
    assert verify_scr(g, scr, p.targets, p.eps).ok
    assert k2n_hubs(g)[:2] == (1, 3)
    assert check_spacing(g, scr, n) == (distance, bound, True)


def test_k2n_hubs_on_c4():
    h1, h2, n = k2n_hubs(C4)
    assert n == 2 and h2 not in C4.adjacency()[h1]
    with pytest.raises(NotK2n):
        check_spacing(C4, basis_pinwheel(1))


def test_not_k2n():
    g = build_graph(BuildProgram([InsertCycle(0)]))
    with pytest.raises(NotK2n):
        k2n_hubs(g)


def test_central_gap_ratio():
    assert central_gap_ratio(basis_pinwheel(F(3, 7))) == F(3, 7)


def test_random_corruptions_are_caught():
    from programs import random_program
    rng = random.Random(8)
    p = random_program(rng, max_ops=5)
    g, scr = layout(p)
    for _ in range(40):
        v = rng.choice(sorted(scr.squares))
        shift = F(rng.choice([-1, 1]) * rng.randint(1, 50), rng.randint(1, 5000))
        bad = dict(scr.squares)
        bad[v] = scr.squares[v].translated(**{rng.choice(["dx", "dy"]): shift})
        rep = verify_scr(g, type(scr)(bad, scr.gaps, scr.frame), p.targets, p.eps)
        assert not rep.ok
