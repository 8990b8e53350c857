from fractions import Fraction as F
import random

import pytest
from hypothesis import given, settings, strategies as st

from squarecontact.geometry import aspect_ratio
from squarecontact.graph import BuildProgram, InsertCycle, InsertVertex, ProgramError, SplitPair, build_graph
from squarecontact.layout import NonPositiveInput, basis_pinwheel, layout, plan_ratios
from squarecontact.verify import verify_scr

from conftest import rationals
from programs import random_program


def test_basis_pinwheel_unit():
    scr = basis_pinwheel(1)
    assert scr.gaps[0].bounds == (1, 1, 2, 2)
    assert [scr.squares[v].bounds for v in range(4)] == [
        (-1, 0, 1, 2), (0, 2, 2, 4), (2, 1, 4, 3), (1, -1, 3, 1)]


@given(rationals(F(1, 10), 10))
def test_basis_pinwheel_is_a_valid_c4(a):
    scr = basis_pinwheel(a)
    g = build_graph(BuildProgram())
    assert aspect_ratio(scr.gaps[0]) == a
    assert verify_scr(g, scr, {0: a}, F(1, 100)).ok


def test_basis_pinwheel_rejects_zero():
    with pytest.raises(NonPositiveInput):
        basis_pinwheel(0)


def test_plan_windows_shrink_upwards():
    p = BuildProgram([InsertVertex(0), InsertCycle(1), InsertVertex(2, SplitPair.SECOND_FOURTH)])
    g = build_graph(p)
    p.targets = {f: F(f + 1, 3) for f in g.leaves}
    plan = plan_ratios(g, p.targets, F(1, 50))
    for f, node in plan.items():
        for c in node.children:
            assert node.budget <= plan[c].window
        assert 0 < node.window
    assert plan[1].kind == "ring"
    assert plan[0].kind == "vertex-h"
    assert plan[2].kind == "vertex-v"


def test_vertex_h_needs_sum_plus_one():
    p = BuildProgram([InsertVertex(0)], {1: 2, 2: F(1, 2)})
    g, scr = layout(p)
    assert aspect_ratio(scr.gaps[1]) == 2 and aspect_ratio(scr.gaps[2]) == F(1, 2)
    assert scr.squares[4].side == scr.gaps[1].width


def test_missing_target_is_reported():
    with pytest.raises(ProgramError, match="MissingTarget"):
        layout(BuildProgram([InsertVertex(0)], {1: 1}))


@settings(max_examples=30)
@given(st.integers(0, 10_000))
def test_random_programs_verify(seed):
    p = random_program(random.Random(seed), max_ops=6)
    g, scr = layout(p)
    report = verify_scr(g, scr, p.targets, p.eps)
    assert report.ok, report.records()
    assert set(scr.gaps) == set(g.leaves)


def test_layout_is_deterministic():
    p = random_program(random.Random(99), max_ops=10)
    assert layout(p)[1] == layout(p)[1]
